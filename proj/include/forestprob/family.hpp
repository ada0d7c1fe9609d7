#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "forestprob/graph.hpp"

namespace forestprob {

enum class FamilyKind {
    Star,               // K_{1,n}
    Triangle,           // K_3
    GS,                 // glued stars GS_{a,b,c}
    GSPlus,             // glued stars plus the center-center edge
    Paw,                // paw with a pendant leaves on its degree-1 vertex
    Di,                 // diamond with a pendant leaves on a degree-2 vertex
    K4,                 // K_4 with a pendant leaves on one vertex
    Complete,           // K_n
    CompleteBipartite,  // K_{s,t}
};

std::string kind_name(FamilyKind kind);

// A validated, parameterized family member. Use the named factories; they
// enforce the per-kind invariants and normalize GS/GSPlus to a <= c and
// CompleteBipartite to s <= t.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Triangle;
    std::vector<int> params;

    static FamilySpec star(int n);                      // n >= 1
    static FamilySpec triangle();
    static FamilySpec gs(int a, int b, int c);          // b >= 1
    static FamilySpec gs_plus(int a, int b, int c);     // b >= 1
    static FamilySpec paw(int a);                       // a >= 0
    static FamilySpec di(int a);                        // a >= 0
    static FamilySpec k4(int a);                        // a >= 0
    static FamilySpec complete(int n);                  // n >= 2
    static FamilySpec complete_bipartite(int s, int t); // s,t >= 1

    int vertex_count() const;
    // "gs:1,1,8", "paw:3", "triangle", "k:5", "kst:2,3"
    std::string to_string() const;
    static FamilySpec parse(const std::string& text);

    bool operator==(const FamilySpec&) const = default;
    auto operator<=>(const FamilySpec&) const = default;
};

// Resolves cross-family aliases to a single preferred representative
// (isomorphic parametrizations exist between kinds, e.g. the paw is both
// paw:0 and gsplus:0,1,1). Star/Triangle win, then Paw/Di/K4, then GS/GSPlus.
// Idempotent; GS/GSPlus parameter order is already normalized by the
// factories.
FamilySpec canonical(const FamilySpec& spec);

// Builds the graph with a fixed, documented vertex numbering:
//   Star(n):  0 = center, 1..n leaves.
//   Triangle: vertices 0,1,2.
//   GS(a,b,c):  0 = top center, 1 = bottom center, 2..b+1 glue,
//               b+2..b+a+1 top leaves, b+a+2..b+a+c+1 bottom leaves.
//               Edge order: top center to glue, top center to top leaves,
//               bottom center to glue, bottom center to bottom leaves.
//   GSPlus:     as GS, plus the center-center edge (0,1) last.
//   Paw(a):   0 = stem (the paw's degree-1 vertex), 1,2,3 = triangle with 1
//             adjacent to 0; leaves 4..a+3 attach to 0.
//   Di(a):    0,1 = the adjacent degree-3 pair, 2,3 = degree-2 vertices;
//             leaves 4..a+3 attach to vertex 2 (the two degree-2 vertices are
//             symmetric; 2 is the frozen choice).
//   K4(a):    0..3 complete; leaves 4..a+3 attach to vertex 0.
//   Complete(n), CompleteBipartite(s,t): lexicographic edge order, parts
//             0..s-1 and s..s+t-1.
Graph construct_family(const FamilySpec& spec);

struct Classification {
    std::optional<FamilySpec> family;  // canonical representative when classified
    int matching_cap3 = 0;             // min(3, matching number)

    bool unclassified() const { return !family.has_value(); }
    // "paw:0", "unclassified (matching number >= 3)", "unclassified (other)"
    std::string describe() const;
};

// Classifies a graph against the star/triangle/five-family catalogue.
// Requires no isolated vertices (SpecError otherwise).
Classification classify(const Graph& g);

}  // namespace forestprob
