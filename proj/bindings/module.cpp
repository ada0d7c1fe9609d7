#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "forestprob/collision.hpp"
#include "forestprob/errors.hpp"
#include "forestprob/family.hpp"
#include "forestprob/formulas.hpp"
#include "forestprob/graph.hpp"
#include "forestprob/process.hpp"
#include "forestprob/report.hpp"
#include "forestprob/version.hpp"

namespace py = pybind11;
using namespace forestprob;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

py::object to_fraction(const Rational& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(fraction_string(q));
}

py::dict to_dict(const TreeDistribution& dist) {
    py::dict out;
    for (const auto& [k, p] : dist.probs()) out[py::int_(k)] = to_fraction(p);
    return out;
}

Graph make_graph(int n, const EdgeList& edges) { return Graph::from_edges(n, edges); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tree-count distributions of the random-edge-ordering forest process";
    m.attr("__version__") = kVersion;

    // Tried last: anything not claimed below becomes a ValueError.
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const GuardError&) {
            throw;  // handed to the translator registered after this one
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
    py::register_exception<GuardError>(m, "GuardError");

    m.def(
        "tree_distribution",
        [](int n, const EdgeList& edges, const std::string& engine, bool force,
           int workers) {
            const Graph g = make_graph(n, edges);
            const EngineOptions opts{force, workers};
            if (engine == "brute") return to_dict(exact_bruteforce(g, opts));
            if (engine == "dp") return to_dict(exact_subset_dp(g, opts));
            throw ParseError("engine must be 'brute' or 'dp', got '" + engine + "'");
        },
        py::arg("n"), py::arg("edges"), py::arg("engine") = "dp",
        py::arg("force") = false, py::arg("workers") = 1,
        "Exact distribution {k: Fraction} of the number of trees");

    m.def(
        "family_distribution",
        [](const std::string& spec) {
            return to_dict(formulas::family_distribution(FamilySpec::parse(spec)));
        },
        py::arg("spec"), "Closed-form distribution for a family spec string");

    m.def(
        "construct_family",
        [](const std::string& spec) {
            const Graph g = construct_family(FamilySpec::parse(spec));
            return py::make_tuple(g.n, g.edges);
        },
        py::arg("spec"), "(n, edges) for a family spec string");

    m.def(
        "classify",
        [](int n, const EdgeList& edges) { return classify(make_graph(n, edges)).describe(); },
        py::arg("n"), py::arg("edges"),
        "Family spec string, or an 'unclassified (...)' tag");

    m.def(
        "run_ordering",
        [](int n, const EdgeList& edges, const std::vector<int>& ordering) {
            const auto result = run_ordering(make_graph(n, edges), ordering);
            return py::make_tuple(result.kept, result.trees);
        },
        py::arg("n"), py::arg("edges"), py::arg("ordering"),
        "(kept edge indices, tree count) for one explicit ordering");

    m.def(
        "monte_carlo",
        [](int n, const EdgeList& edges, long long trials, std::uint64_t seed,
           int workers) {
            const auto est = monte_carlo(make_graph(n, edges), trials, seed, workers);
            py::dict counts;
            for (const auto& [k, c] : est.counts) counts[py::int_(k)] = c;
            py::dict out;
            out["trials"] = est.trials;
            out["seed"] = est.seed;
            out["workers"] = est.workers;
            out["counts"] = counts;
            return out;
        },
        py::arg("n"), py::arg("edges"), py::arg("trials"), py::arg("seed") = 0,
        py::arg("workers") = 1, "Seeded tally {k: count} of tree counts");

    m.def(
        "parse_graph6",
        [](const std::string& text) {
            const Graph g = parse_graph6(text);
            return py::make_tuple(g.n, g.edges);
        },
        py::arg("text"));

    m.def(
        "emit_graph6",
        [](int n, const EdgeList& edges) { return emit_graph6(make_graph(n, edges)); },
        py::arg("n"), py::arg("edges"));

    m.def(
        "verify_known",
        [](int max_t) {
            const auto summary = verify_known(max_t);
            py::list items;
            for (const auto& item : summary.items)
                items.append(py::make_tuple(item.name, item.pass));
            return py::make_tuple(summary.all_pass, items);
        },
        py::arg("max_t") = 10,
        "(all_pass, [(name, pass), ...]) for the known profile identities");

    m.def(
        "sweep",
        [](const std::string& family, int max_vertices, const std::string& engine,
           int workers) {
            const auto report =
                sweep(parse_sweep_family(family), max_vertices,
                      engine == "dp" ? ProfileEngine::Dp : ProfileEngine::Formula,
                      workers);
            return collision_report_json(report).dump();
        },
        py::arg("family"), py::arg("max_vertices"), py::arg("engine") = "formula",
        py::arg("workers") = 1, "Collision report as a JSON string");
}
