#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forestprob/errors.hpp"

namespace forestprob {

// Simple undirected graph: an indexed vertex set 0..n-1 plus an ordered edge
// list. Edge identity is the list index; edge orderings elsewhere in the
// library are permutations of these indices, so the list order is preserved
// exactly as given.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    // Validates endpoints in range, no self-loops, no duplicate unordered
    // pairs. Throws SpecError.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<int> degrees() const;
    bool has_isolated_vertex() const;
    // True iff all n vertices lie in one component (n <= 1 counts as
    // connected).
    bool connected() const;
    std::vector<std::vector<int>> adjacency() const;
};

// Lines of "u v" with 0-indexed decimal endpoints; blank lines and lines
// starting with '#' are ignored. An optional header line "n=<count>" fixes the
// vertex count (it must cover the largest index); otherwise n = 1 + max index.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// graph6: printable offset-63 encoding, column-major upper triangle. Decoding
// returns edges sorted lexicographically. Supports the 1-byte and 4-byte
// vertex-count headers (n < 258048) and an optional ">>graph6<<" prefix.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Same edges, vertices of degree >= 1 reindexed preserving relative order.
Graph strip_isolated(const Graph& g);

// min(cap, matching number), by exhaustive search over edge pairs/triples.
// cap must be 1, 2 or 3.
int max_disjoint_edges_capped(const Graph& g, int cap);

// Exact isomorphism by degree-filtered backtracking. Both graphs must have at
// most 12 vertices (GuardError otherwise).
bool are_isomorphic(const Graph& g, const Graph& h);

inline constexpr int kIsomorphismMaxVertices = 12;

}  // namespace forestprob
