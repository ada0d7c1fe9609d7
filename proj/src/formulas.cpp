#include "forestprob/formulas.hpp"

#include <algorithm>

#include "forestprob/errors.hpp"

namespace forestprob {
namespace formulas {

Integer binomial(long long n, long long k) {
    if (n < 0) throw SpecError("binomial needs n >= 0");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Integer vandermonde_sum(int l, int m, int q, int n) {
    if (m < 0 || n < 0) return 0;
    Integer sum = 0;
    // C(l-j, m) needs j <= l-m; C(q+j, n) needs j >= n-q. Either bound may be
    // negative.
    for (int j = n - q; j <= l - m; ++j)
        sum += binomial(l - j, m) * binomial(q + j, n);
    return sum;
}

Rational complete(int n, int k) {
    if (n < 2) throw SpecError("complete graph formula needs n >= 2");
    if (k < 1 || 2 * k > n) return 0;
    Integer multinomial = binomial(n - 1, n - 2 * k) * binomial(2 * k - 1, k);
    Integer numer = multinomial << (n - 2 * k);
    return Rational(numer, binomial(2 * n - 2, n));
}

Rational complete_bipartite(int s, int t, int k) {
    if (s < 1 || t < 1) throw SpecError("complete bipartite formula needs s,t >= 1");
    Integer numer = Integer(s + t) * binomial(s, k) * binomial(t, k);
    Integer denom = Integer(s) * t * binomial(s + t, s);
    return Rational(numer, denom);
}

namespace {

void require_gs_params(int a, int b, int c) {
    if (a < 0 || c < 0) throw SpecError("glued star leaf counts must be non-negative");
    if (b < 1) throw SpecError("glued star needs at least one glued leaf");
}

}  // namespace

Rational gs_one_tree(int a, int b, int c) {
    require_gs_params(a, b, c);
    return Rational(b, (b + c + 1) * (b + c)) + Rational(b, (a + b + 1) * (a + b));
}

Rational gs_plus_one_tree(int a, int b, int c) {
    require_gs_params(a, b, c);
    return Rational(2 * b + c + 2, (b + c + 1) * (b + c + 2)) +
           Rational(2 * b + a + 2, (b + a + 1) * (b + a + 2)) -
           Rational(1, a + 2 * b + c + 1);
}

namespace {

// One of the two mirror-image double sums: j runs over the leaves on the
// side the process starts from (`leaves`), and `other_star` = the edge count
// of the star the first cross-over edge lands in (b+c or a+b). `slack` is 0
// for the plain glued star and 1 when the center-center edge is present.
Rational half_double_sum(int leaves, int b, int other_star, int m, int slack) {
    Integer numer = 0;
    for (int i = 0; i <= b; ++i)
        for (int j = 0; j <= leaves; ++j)
            numer += binomial(leaves, j) * binomial(b, i) * factorial(i + j) *
                     (other_star - i) * factorial(m - i - j - 1 + slack);
    return Rational(numer, factorial(m + slack));
}

}  // namespace

Rational gs_two_trees_double_sum(int a, int b, int c) {
    require_gs_params(a, b, c);
    const int m = a + 2 * b + c;
    return half_double_sum(a, b, b + c, m, 0) - Rational(b + c, m) +
           half_double_sum(c, b, a + b, m, 0) - Rational(a + b, m);
}

Rational gs_plus_two_trees_double_sum(int a, int b, int c) {
    require_gs_params(a, b, c);
    const int m = a + 2 * b + c;
    return half_double_sum(a, b, b + c, m, 1) - Rational(b + c, m + 1) +
           half_double_sum(c, b, a + b, m, 1) - Rational(a + b, m + 1);
}

Rational paw_one_tree(int a) {
    if (a < 0) throw SpecError("leaf count must be non-negative");
    return Rational(1, 6) - Rational(1, a + 3) + Rational(1, a + 1);
}

Rational di_one_tree(int a) {
    if (a < 0) throw SpecError("leaf count must be non-negative");
    return Rational(3, 10) - Rational(2, a + 4) + Rational(2, a + 2);
}

Rational k4_one_tree(int a) {
    if (a < 0) throw SpecError("leaf count must be non-negative");
    return Rational(2, 5) - Rational(3, a + 5) + Rational(3, a + 3);
}

namespace {

TreeDistribution one_or_two_trees(const Rational& p1) {
    return TreeDistribution{{{1, p1}, {2, Rational(1) - p1}}};
}

}  // namespace

TreeDistribution family_distribution(const FamilySpec& spec) {
    const auto& p = spec.params;
    TreeDistribution dist;
    switch (spec.kind) {
        case FamilyKind::Star:
        case FamilyKind::Triangle:
            dist = TreeDistribution{{{1, Rational(1)}}};
            break;
        case FamilyKind::GS:
            dist = one_or_two_trees(gs_one_tree(p[0], p[1], p[2]));
            break;
        case FamilyKind::GSPlus:
            dist = one_or_two_trees(gs_plus_one_tree(p[0], p[1], p[2]));
            break;
        case FamilyKind::Paw:
            dist = one_or_two_trees(paw_one_tree(p[0]));
            break;
        case FamilyKind::Di:
            dist = one_or_two_trees(di_one_tree(p[0]));
            break;
        case FamilyKind::K4:
            dist = one_or_two_trees(k4_one_tree(p[0]));
            break;
        case FamilyKind::Complete: {
            std::map<int, Rational> probs;
            for (int k = 1; 2 * k <= p[0]; ++k) probs[k] = complete(p[0], k);
            dist = TreeDistribution{std::move(probs)};
            break;
        }
        case FamilyKind::CompleteBipartite: {
            // The catalogued formula; deliberately returned unvalidated.
            std::map<int, Rational> probs;
            for (int k = 1; k <= std::min(p[0], p[1]); ++k)
                probs[k] = complete_bipartite(p[0], p[1], k);
            return TreeDistribution{std::move(probs)};
        }
    }
    dist.require_normalized(spec.vertex_count());
    return dist;
}

KstAudit audit_complete_bipartite(int s, int t) {
    const auto spec = FamilySpec::complete_bipartite(s, t);
    KstAudit audit;
    audit.s = spec.params[0];
    audit.t = spec.params[1];
    audit.formula = family_distribution(spec);
    audit.oracle = exact_subset_dp(construct_family(spec));
    const int k_hi = std::max(audit.formula.k_max(), audit.oracle.k_max());
    for (int k = 1; k <= k_hi; ++k)
        if (audit.formula.p(k) != audit.oracle.p(k)) audit.mismatched_k.push_back(k);
    audit.formula_normalized = audit.formula.total() == 1;
    return audit;
}

}  // namespace formulas
}  // namespace forestprob
