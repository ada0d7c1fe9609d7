#include "forestprob/collision.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <thread>

#include "forestprob/errors.hpp"
#include "forestprob/formulas.hpp"

namespace forestprob {

std::array<FamilySpec, 3> fam_a_triple(int s, int t) {
    if (s < 1 || t < 1) throw SpecError("fam_a needs s, t >= 1");
    const int target = 2 * t * (t + 1);
    if (target % s != 0)
        throw SpecError("fam_a needs s dividing 2t(t+1); s=" + std::to_string(s) +
                        ", t=" + std::to_string(t));
    const int r = target / s;
    return {canonical(FamilySpec::gs(r + 3 * t + 1, s, t)),
            canonical(FamilySpec::gs(t, r + s + 2 * t + 1, t)),
            canonical(FamilySpec::gs(3 * t + s + 1, r, t))};
}

std::array<FamilySpec, 2> fam_b_pair(int t) {
    if (t < 1) throw SpecError("fam_b needs t >= 1");
    return {canonical(FamilySpec::gs(5 * t + 3, t, 2 * t)),
            canonical(FamilySpec::gs(5 * t + 1, t + 1, 2 * t + 1))};
}

const std::array<std::pair<std::array<int, 3>, std::array<int, 3>>, 4> kKnownGsPlusPairs = {{
    {{17, 3, 9}, {10, 9, 10}},
    {{28, 5, 9}, {26, 8, 8}},
    {{103, 15, 48}, {63, 71, 32}},
    {{95, 23, 53}, {53, 66, 52}},
}};

SweepFamily parse_sweep_family(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (s == "gs") return SweepFamily::GS;
    if (s == "gsplus") return SweepFamily::GSPlus;
    if (s == "paw") return SweepFamily::Paw;
    if (s == "di") return SweepFamily::Di;
    if (s == "k4") return SweepFamily::K4;
    if (s == "all") return SweepFamily::All;
    throw ParseError("unknown sweep family '" + name + "'");
}

std::string sweep_family_name(SweepFamily family) {
    switch (family) {
        case SweepFamily::GS: return "gs";
        case SweepFamily::GSPlus: return "gsplus";
        case SweepFamily::Paw: return "paw";
        case SweepFamily::Di: return "di";
        case SweepFamily::K4: return "k4";
        case SweepFamily::All: return "all";
    }
    throw SpecError("unknown sweep family");
}

namespace {

void append_glued(std::vector<FamilySpec>& out, int max_vertices, bool plus) {
    for (int b = 1; b + 2 <= max_vertices; ++b)
        for (int a = 0; a + b + 2 <= max_vertices; ++a)
            for (int c = a; a + b + c + 2 <= max_vertices; ++c) {
                auto spec = plus ? FamilySpec::gs_plus(a, b, c) : FamilySpec::gs(a, b, c);
                if (canonical(spec) != spec) continue;  // alias of another kind
                out.push_back(std::move(spec));
            }
}

void append_pendant(std::vector<FamilySpec>& out, int max_vertices, FamilyKind kind) {
    for (int a = 0; a + 4 <= max_vertices; ++a) {
        switch (kind) {
            case FamilyKind::Paw: out.push_back(FamilySpec::paw(a)); break;
            case FamilyKind::Di: out.push_back(FamilySpec::di(a)); break;
            default: out.push_back(FamilySpec::k4(a)); break;
        }
    }
}

std::vector<FamilySpec> enumerate_tuples(SweepFamily family, int max_vertices) {
    std::vector<FamilySpec> out;
    const bool all = family == SweepFamily::All;
    if (all || family == SweepFamily::GS) append_glued(out, max_vertices, false);
    if (all || family == SweepFamily::GSPlus) append_glued(out, max_vertices, true);
    if (all || family == SweepFamily::Paw) append_pendant(out, max_vertices, FamilyKind::Paw);
    if (all || family == SweepFamily::Di) append_pendant(out, max_vertices, FamilyKind::Di);
    if (all || family == SweepFamily::K4) append_pendant(out, max_vertices, FamilyKind::K4);
    return out;
}

std::vector<int> sorted_degrees(const FamilySpec& spec) {
    auto deg = construct_family(spec).degrees();
    std::sort(deg.begin(), deg.end());
    return deg;
}

GroupCertificate certify(const std::vector<FamilySpec>& members) {
    std::vector<std::vector<int>> degs;
    degs.reserve(members.size());
    for (const auto& m : members) degs.push_back(sorted_degrees(m));

    bool all_distinct = true;
    std::vector<std::pair<size_t, size_t>> ambiguous;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (degs[i] == degs[j]) {
                all_distinct = false;
                ambiguous.emplace_back(i, j);
            }
    if (all_distinct) return GroupCertificate::DegreeSequence;

    for (const auto& [i, j] : ambiguous) {
        const auto gi = construct_family(members[i]);
        const auto gj = construct_family(members[j]);
        if (gi.n > kIsomorphismMaxVertices || gj.n > kIsomorphismMaxVertices)
            return GroupCertificate::Unchecked;
        if (are_isomorphic(gi, gj))
            throw SpecError("collision group contains isomorphic members " +
                            members[i].to_string() + " and " + members[j].to_string());
    }
    return GroupCertificate::Isomorphism;
}

void attach_explanations(CollisionGroup& group, int max_vertices) {
    auto contains_all = [&](const auto& specs) {
        return std::all_of(specs.begin(), specs.end(), [&](const FamilySpec& s) {
            return std::find(group.members.begin(), group.members.end(), s) !=
                   group.members.end();
        });
    };
    bool fam_a = false, fam_b = false;
    for (int t = 1; 4 * t + 5 <= max_vertices && !fam_a; ++t)
        for (int s = 1; s <= max_vertices && !fam_a; ++s) {
            if ((2 * t * (t + 1)) % s != 0) continue;
            const int r = 2 * t * (t + 1) / s;
            if (r + s + 4 * t + 3 > max_vertices) continue;
            if (contains_all(fam_a_triple(s, t))) fam_a = true;
        }
    for (int t = 1; 8 * t + 5 <= max_vertices && !fam_b; ++t)
        if (contains_all(fam_b_pair(t))) fam_b = true;
    if (fam_a) group.explained_by.push_back("famA");
    if (fam_b) group.explained_by.push_back("famB");
}

}  // namespace

CollisionReport sweep(SweepFamily family, int max_vertices, ProfileEngine engine,
                      int workers) {
    if (max_vertices < 1) throw SpecError("max_vertices must be positive");
    if (engine == ProfileEngine::Dp && max_vertices > kSubsetDpMaxVertices)
        throw GuardError("dp profile engine refuses max_vertices > " +
                         std::to_string(kSubsetDpMaxVertices));
    workers = std::max(1, workers);

    const auto specs = enumerate_tuples(family, max_vertices);
    std::vector<TreeDistribution> profiles(specs.size());
    auto compute = [&](size_t i) {
        if (engine == ProfileEngine::Formula) {
            profiles[i] = formulas::family_distribution(specs[i]);
        } else {
            profiles[i] = exact_subset_dp(construct_family(specs[i]));
        }
    };
    if (workers == 1 || specs.size() < 2) {
        for (size_t i = 0; i < specs.size(); ++i) compute(i);
    } else {
        std::atomic<size_t> next{0};
        auto drain = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= specs.size()) return;
                compute(i);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }

    // Bucket sequentially in enumeration order so grouping, member order and
    // group order are all independent of the worker scheduling.
    std::map<std::map<int, Rational>, std::vector<size_t>> buckets;
    for (size_t i = 0; i < specs.size(); ++i) buckets[profiles[i].probs()].push_back(i);

    std::vector<const std::vector<size_t>*> collided;
    for (const auto& [_, idxs] : buckets)
        if (idxs.size() >= 2) collided.push_back(&idxs);
    std::sort(collided.begin(), collided.end(),
              [](const auto* a, const auto* b) { return a->front() < b->front(); });

    CollisionReport report;
    report.family = sweep_family_name(family);
    report.max_vertices = max_vertices;
    report.engine = engine == ProfileEngine::Formula ? "formula" : "dp";
    report.workers = workers;
    report.instances = static_cast<long long>(specs.size());
    for (const auto* idxs : collided) {
        CollisionGroup group;
        group.profile = profiles[idxs->front()];
        for (size_t i : *idxs) group.members.push_back(specs[i]);
        attach_explanations(group, max_vertices);
        group.certificate = certify(group.members);
        report.groups.push_back(std::move(group));
    }
    return report;
}

namespace {

VerifyItem check_members(std::string name, std::vector<FamilySpec> members) {
    VerifyItem item;
    item.name = std::move(name);
    item.members = std::move(members);
    item.profile = formulas::family_distribution(item.members.front());
    item.pass = std::all_of(item.members.begin() + 1, item.members.end(),
                            [&](const FamilySpec& s) {
                                return formulas::family_distribution(s) == item.profile;
                            });
    return item;
}

}  // namespace

VerifySummary verify_known(int max_t) {
    if (max_t < 1) throw SpecError("max_t must be >= 1");
    VerifySummary summary;
    for (int t = 1; t <= max_t; ++t)
        for (int s = 1; s <= max_t; ++s) {
            if ((2 * t * (t + 1)) % s != 0) continue;
            auto triple = fam_a_triple(s, t);
            summary.items.push_back(
                check_members("famA s=" + std::to_string(s) + ",t=" + std::to_string(t),
                              {triple.begin(), triple.end()}));
        }
    for (int t = 1; t <= max_t; ++t) {
        auto pair = fam_b_pair(t);
        summary.items.push_back(
            check_members("famB t=" + std::to_string(t), {pair.begin(), pair.end()}));
    }
    for (const auto& [left, right] : kKnownGsPlusPairs) {
        auto name = "gsplus (" + std::to_string(left[0]) + "," + std::to_string(left[1]) +
                    "," + std::to_string(left[2]) + ")=(" + std::to_string(right[0]) + "," +
                    std::to_string(right[1]) + "," + std::to_string(right[2]) + ")";
        summary.items.push_back(check_members(
            std::move(name), {FamilySpec::gs_plus(left[0], left[1], left[2]),
                              FamilySpec::gs_plus(right[0], right[1], right[2])}));
    }
    for (const auto& item : summary.items) summary.all_pass = summary.all_pass && item.pass;
    return summary;
}

}  // namespace forestprob
