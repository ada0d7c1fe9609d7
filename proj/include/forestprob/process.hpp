#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forestprob/graph.hpp"
#include "forestprob/rational.hpp"

namespace forestprob {

// Outcome of running the forest building process on one explicit ordering.
struct ForestResult {
    std::vector<int> kept;  // edge indices in acceptance order
    int trees = 0;          // components of the kept forest
};

// Map from tree count k >= 1 to exact probability. Only nonzero entries are
// stored. Engines validate the full invariant (sum exactly 1, contiguous
// support, k_max <= n/2); the formula-audit path for K_{s,t} deliberately
// skips it, since the catalogued formula does not normalize.
class TreeDistribution {
public:
    TreeDistribution() = default;
    // Drops zero entries; rejects keys < 1 and values outside [0,1].
    explicit TreeDistribution(std::map<int, Rational> probs);

    const std::map<int, Rational>& probs() const { return probs_; }
    Rational p(int k) const;
    Rational total() const;
    bool empty() const { return probs_.empty(); }
    int k_min() const;
    int k_max() const;
    // Throws SpecError unless the sum is exactly 1, the support is a
    // contiguous range, and k_max <= floor(n/2).
    void require_normalized(int n) const;

    // One "k: num/den" line per entry.
    std::string to_text() const;

    bool operator==(const TreeDistribution&) const = default;

private:
    std::map<int, Rational> probs_;
};

struct EngineOptions {
    bool force = false;  // override the size guards
    int workers = 1;
};

inline constexpr int kBruteForceMaxEdges = 10;
inline constexpr int kSubsetDpMaxVertices = 20;

// Processes edges in the given order; an edge is kept iff at least one
// endpoint is unseen, and both endpoints become seen when it is kept.
// `ordering` must be a permutation of 0..m-1.
ForestResult run_ordering(const Graph& g, std::span<const int> ordering);

// Exact distribution by enumerating all m! orderings. Guard: m <= 10 unless
// forced. Deterministic in the worker count.
TreeDistribution exact_bruteforce(const Graph& g, const EngineOptions& opts = {});

// Exact distribution by a layered dynamic program over seen-vertex subsets.
// Orderings are aggregated by (seen set, trees so far); after c consumed
// edges the number of skipped interior edges is determined as
// c - (|seen| - trees), so the layer index carries it. Guard: n <= 20 unless
// forced (hard cap 48 for the bitmask).
TreeDistribution exact_subset_dp(const Graph& g, const EngineOptions& opts = {});

// Seeded Monte Carlo tally of tree counts.
struct McEstimate {
    long long trials = 0;
    std::map<int, long long> counts;
    std::uint64_t seed = 0;
    int workers = 1;
};

// Draws `trials` uniform orderings by Fisher-Yates over a fixed, documented
// generator (worker i uses std::mt19937_64 seeded with splitmix64(seed + i),
// bounded draws by unbiased rejection sampling) and runs each. Identical
// (g, trials, seed, workers) yields identical counts on every platform.
McEstimate monte_carlo(const Graph& g, long long trials, std::uint64_t seed,
                       int workers = 1);

// (point estimate counts[k]/trials, binomial standard error). trials >= 2.
std::pair<double, double> estimate_with_stderr(const McEstimate& e, int k);

}  // namespace forestprob
