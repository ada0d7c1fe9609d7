#pragma once

#include <vector>

#include "forestprob/family.hpp"
#include "forestprob/process.hpp"
#include "forestprob/rational.hpp"

namespace forestprob {
namespace formulas {

// 0 when k < 0 or k > n; n must be >= 0.
Integer binomial(long long n, long long k);

// sum_j C(l-j, m) * C(q+j, n) over all j with nonzero summands. Equals
// C(l+q+1, m+n+1); the identity is property-tested, not assumed.
Integer vandermonde_sum(int l, int m, int q, int n);

// P(K_n, k): multinomial(n-1; n-2k, k, k-1) * 2^(n-2k) / C(2n-2, n),
// zero for infeasible k. n >= 2.
Rational complete(int n, int k);

// P(K_{s,t}, k) exactly as catalogued: (s+t) C(s,k) C(t,k) / (s t C(s+t, s)).
// Known not to normalize for some s,t; see audit_complete_bipartite.
Rational complete_bipartite(int s, int t, int k);

// P(GS_{a,b,c}, 1) = b/((b+c+1)(b+c)) + b/((a+b+1)(a+b)). b >= 1.
Rational gs_one_tree(int a, int b, int c);

// P(GS+_{a,b,c}, 1), the three-term closed form. b >= 1.
Rational gs_plus_one_tree(int a, int b, int c);

// The un-simplified double-sum expressions for the two-tree probability,
// evaluated term by term over factorials. They exist to cross-check the
// closed forms above.
Rational gs_two_trees_double_sum(int a, int b, int c);
Rational gs_plus_two_trees_double_sum(int a, int b, int c);

// P(Paw_a, 1) = 1/6 - 1/(a+3) + 1/(a+1), and the diamond / K4 analogues.
Rational paw_one_tree(int a);
Rational di_one_tree(int a);
Rational k4_one_tree(int a);

// Full distribution for a family member from its closed form: {1: 1} for
// stars and the triangle, {1: p1, 2: 1-p1} for the two-tree families, the
// complete-graph closed form over all feasible k for Complete. CompleteBipartite
// returns the catalogued formula's values without the normalization check (the
// formula is not normalized for all s,t); everything else is validated.
TreeDistribution family_distribution(const FamilySpec& spec);

// Per-k comparison of the catalogued K_{s,t} formula against the subset-DP
// oracle. The oracle is the ground truth; `mismatched_k` lists where the
// formula disagrees.
struct KstAudit {
    int s = 0;
    int t = 0;
    TreeDistribution formula;
    TreeDistribution oracle;
    std::vector<int> mismatched_k;
    bool formula_normalized = false;
};

KstAudit audit_complete_bipartite(int s, int t);

}  // namespace formulas
}  // namespace forestprob
