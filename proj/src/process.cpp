#include "forestprob/process.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "forestprob/errors.hpp"

namespace forestprob {

TreeDistribution::TreeDistribution(std::map<int, Rational> probs) {
    for (const auto& [k, p] : probs) {
        if (k < 1) throw SpecError("tree counts must be >= 1, got " + std::to_string(k));
        if (p < 0 || p > 1)
            throw SpecError("probability for k=" + std::to_string(k) +
                            " outside [0,1]: " + fraction_string(p));
        if (p != 0) probs_.emplace(k, p);
    }
}

Rational TreeDistribution::p(int k) const {
    auto it = probs_.find(k);
    return it == probs_.end() ? Rational(0) : it->second;
}

Rational TreeDistribution::total() const {
    Rational sum = 0;
    for (const auto& [k, p] : probs_) sum += p;
    return sum;
}

int TreeDistribution::k_min() const {
    if (probs_.empty()) throw SpecError("empty distribution has no k_min");
    return probs_.begin()->first;
}

int TreeDistribution::k_max() const {
    if (probs_.empty()) throw SpecError("empty distribution has no k_max");
    return probs_.rbegin()->first;
}

void TreeDistribution::require_normalized(int n) const {
    if (total() != 1)
        throw SpecError("probabilities sum to " + fraction_string(total()) +
                        ", expected exactly 1");
    for (int k = k_min(); k <= k_max(); ++k)
        if (!probs_.contains(k))
            throw SpecError("support has a gap at k=" + std::to_string(k));
    if (k_max() > n / 2)
        throw SpecError("k_max=" + std::to_string(k_max()) + " exceeds floor(n/2) for n=" +
                        std::to_string(n));
}

std::string TreeDistribution::to_text() const {
    std::ostringstream out;
    for (const auto& [k, p] : probs_) out << k << ": " << fraction_string(p) << "\n";
    return out.str();
}

ForestResult run_ordering(const Graph& g, std::span<const int> ordering) {
    const int m = g.edge_count();
    if (m == 0) throw SpecError("the process needs at least one edge");
    if (static_cast<int>(ordering.size()) != m)
        throw SpecError("ordering has " + std::to_string(ordering.size()) +
                        " entries for " + std::to_string(m) + " edges");
    std::vector<char> used(m, 0);
    for (int idx : ordering) {
        if (idx < 0 || idx >= m || used[idx])
            throw SpecError("ordering is not a permutation of the edge indices");
        used[idx] = 1;
    }

    ForestResult result;
    std::vector<char> seen(g.n, 0);
    for (int idx : ordering) {
        const auto& [u, v] = g.edges[idx];
        if (seen[u] && seen[v]) continue;
        if (!seen[u] && !seen[v]) ++result.trees;
        seen[u] = seen[v] = 1;
        result.kept.push_back(idx);
    }
    return result;
}

namespace {

void require_edges(const Graph& g) {
    if (g.edge_count() == 0) throw SpecError("the process needs at least one edge");
}

// Tree tallies over every ordering with a fixed first edge. The inner loop
// re-runs the keep/skip scan directly; resetting just the endpoints keeps the
// per-permutation cost independent of n.
std::vector<std::uint64_t> tally_with_first(const Graph& g, int first) {
    const int m = g.edge_count();
    std::vector<int> rest;
    rest.reserve(m - 1);
    for (int i = 0; i < m; ++i)
        if (i != first) rest.push_back(i);

    std::vector<std::uint64_t> tally(m + 1, 0);
    std::vector<char> seen(g.n, 0);
    do {
        int trees = 0;
        {
            const auto& [u, v] = g.edges[first];
            ++trees;
            seen[u] = seen[v] = 1;
        }
        for (int idx : rest) {
            const auto& [u, v] = g.edges[idx];
            if (seen[u] && seen[v]) continue;
            if (!seen[u] && !seen[v]) ++trees;
            seen[u] = seen[v] = 1;
        }
        ++tally[trees];
        for (const auto& [u, v] : g.edges) seen[u] = seen[v] = 0;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return tally;
}

}  // namespace

TreeDistribution exact_bruteforce(const Graph& g, const EngineOptions& opts) {
    require_edges(g);
    const int m = g.edge_count();
    if (m > kBruteForceMaxEdges && !opts.force)
        throw GuardError("brute force enumerates " + std::to_string(m) +
                         "! orderings; limit is " + std::to_string(kBruteForceMaxEdges) +
                         " edges unless forced");

    const int workers = std::max(1, std::min(opts.workers, m));
    std::vector<std::vector<std::uint64_t>> per_first(m);
    std::atomic<int> next_first{0};
    auto work = [&] {
        for (;;) {
            int first = next_first.fetch_add(1);
            if (first >= m) return;
            per_first[first] = tally_with_first(g, first);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Integer tallies summed in first-edge order: the result cannot depend on
    // how the firsts were scheduled.
    std::vector<std::uint64_t> tally(m + 1, 0);
    for (int first = 0; first < m; ++first)
        for (int k = 0; k <= m; ++k) tally[k] += per_first[first][k];

    const Integer total = factorial(m);
    std::map<int, Rational> probs;
    for (int k = 1; k <= m; ++k)
        if (tally[k]) probs[k] = Rational(Integer(tally[k]), total);
    TreeDistribution dist{std::move(probs)};
    dist.require_normalized(g.n);
    return dist;
}

TreeDistribution exact_subset_dp(const Graph& g, const EngineOptions& opts) {
    require_edges(g);
    if (g.n > 48)
        throw GuardError("subset dp is hard-capped at 48 vertices (bitmask width)");
    if (g.n > kSubsetDpMaxVertices && !opts.force)
        throw GuardError("subset dp over " + std::to_string(g.n) +
                         " vertices; limit is " + std::to_string(kSubsetDpMaxVertices) +
                         " unless forced");

    const int m = g.edge_count();
    constexpr int kTreeShift = 48;
    constexpr std::uint64_t kSeenMask = (std::uint64_t(1) << kTreeShift) - 1;

    auto inside = [&](std::uint64_t s) {
        int count = 0;
        for (const auto& [u, v] : g.edges)
            if ((s >> u & 1) && (s >> v & 1)) ++count;
        return count;
    };

    std::map<int, Rational> result;
    std::map<std::uint64_t, Rational> layer;
    layer[0] = 1;
    for (int c = 0; c < m && !layer.empty(); ++c) {
        const int r = m - c;
        std::map<std::uint64_t, Rational> next;
        for (const auto& [key, p] : layer) {
            const std::uint64_t s = key & kSeenMask;
            const int k = static_cast<int>(key >> kTreeShift);
            const int u = inside(s) - c;
            if (u == r) {
                // Every remaining edge lies inside the seen set, so the rest
                // of the ordering only skips; the forest is settled.
                result[k] += p;
                continue;
            }
            const Rational step = p / r;
            if (u > 0) next[key] += step * u;
            for (const auto& [a, b] : g.edges) {
                const bool ia = s >> a & 1;
                const bool ib = s >> b & 1;
                if (ia && ib) continue;
                if (ia || ib) {
                    const std::uint64_t ns = s | (std::uint64_t(1) << (ia ? b : a));
                    next[ns | (std::uint64_t(k) << kTreeShift)] += step;
                } else {
                    const std::uint64_t ns =
                        s | (std::uint64_t(1) << a) | (std::uint64_t(1) << b);
                    next[ns | (std::uint64_t(k + 1) << kTreeShift)] += step;
                }
            }
        }
        layer = std::move(next);
    }
    for (const auto& [key, p] : layer) result[static_cast<int>(key >> kTreeShift)] += p;

    TreeDistribution dist{std::move(result)};
    dist.require_normalized(g.n);
    return dist;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform draw from [0, n) without modulo bias.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (-n) % n;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

std::vector<long long> mc_worker(const Graph& g, long long trials, std::uint64_t raw_seed) {
    const int m = g.edge_count();
    std::mt19937_64 rng(splitmix64(raw_seed));
    std::vector<int> ordering(m);
    std::vector<char> seen(g.n, 0);
    std::vector<long long> tally(m + 1, 0);
    for (long long t = 0; t < trials; ++t) {
        std::iota(ordering.begin(), ordering.end(), 0);
        for (int i = m - 1; i >= 1; --i) {
            const auto j = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(i) + 1));
            std::swap(ordering[i], ordering[j]);
        }
        int trees = 0;
        for (int idx : ordering) {
            const auto& [u, v] = g.edges[idx];
            if (seen[u] && seen[v]) continue;
            if (!seen[u] && !seen[v]) ++trees;
            seen[u] = seen[v] = 1;
        }
        ++tally[trees];
        for (const auto& [u, v] : g.edges) seen[u] = seen[v] = 0;
    }
    return tally;
}

}  // namespace

McEstimate monte_carlo(const Graph& g, long long trials, std::uint64_t seed, int workers) {
    require_edges(g);
    if (trials < 1) throw SpecError("monte carlo needs at least one trial");
    workers = std::max(1, workers);

    const long long base = trials / workers;
    const long long extra = trials % workers;
    std::vector<std::vector<long long>> tallies(workers);
    auto run = [&](int i) {
        const long long share = base + (i < extra ? 1 : 0);
        tallies[i] = mc_worker(g, share, seed + static_cast<std::uint64_t>(i));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(run, i);
        for (auto& t : pool) t.join();
    }

    McEstimate est;
    est.trials = trials;
    est.seed = seed;
    est.workers = workers;
    const int m = g.edge_count();
    for (int k = 1; k <= m; ++k) {
        long long sum = 0;
        for (const auto& t : tallies) sum += t[k];
        if (sum) est.counts[k] = sum;
    }
    return est;
}

std::pair<double, double> estimate_with_stderr(const McEstimate& e, int k) {
    if (e.trials < 2) throw SpecError("standard error needs at least two trials");
    auto it = e.counts.find(k);
    const double n = static_cast<double>(e.trials);
    const double phat = it == e.counts.end() ? 0.0 : static_cast<double>(it->second) / n;
    return {phat, std::sqrt(phat * (1.0 - phat) / n)};
}

}  // namespace forestprob
