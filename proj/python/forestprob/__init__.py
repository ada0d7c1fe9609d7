"""Tree-count distributions of the random-edge-ordering forest building process.

Exact engines and closed forms live in the C++ core; probabilities come back
as `fractions.Fraction`, never floats.
"""

from ._core import (
    GuardError,
    __version__,
    classify,
    construct_family,
    emit_graph6,
    family_distribution,
    monte_carlo,
    parse_graph6,
    run_ordering,
    sweep,
    tree_distribution,
    verify_known,
)

__all__ = [
    "GuardError",
    "__version__",
    "classify",
    "construct_family",
    "emit_graph6",
    "family_distribution",
    "monte_carlo",
    "parse_graph6",
    "run_ordering",
    "sweep",
    "tree_distribution",
    "verify_known",
]
