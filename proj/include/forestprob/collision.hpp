#pragma once

#include <array>
#include <string>
#include <vector>

#include "forestprob/family.hpp"
#include "forestprob/process.hpp"

namespace forestprob {

// The three glued-star specs sharing one profile for parameters (s, t) with
// s dividing 2t(t+1): GS_{r+3t+1,s,t}, GS_{t,r+s+2t+1,t}, GS_{3t+s+1,r,t}
// where r = 2t(t+1)/s. Returned canonicalized; throws SpecError when the
// divisibility condition fails.
std::array<FamilySpec, 3> fam_a_triple(int s, int t);

// The glued-star pair GS_{5t+3,t,2t} / GS_{5t+1,t+1,2t+1} for t >= 1.
std::array<FamilySpec, 2> fam_b_pair(int t);

enum class ProfileEngine { Formula, Dp };

// How a group's pairwise non-isomorphism was certified.
enum class GroupCertificate {
    DegreeSequence,  // distinct vertex counts or degree sequences
    Isomorphism,     // backtracking check (all members <= 12 vertices)
    Unchecked,       // could not be certified; flagged, not dropped
};

struct CollisionGroup {
    TreeDistribution profile;
    std::vector<FamilySpec> members;
    std::vector<std::string> explained_by;  // subset of {"famA", "famB"}
    GroupCertificate certificate = GroupCertificate::Unchecked;
};

struct CollisionReport {
    std::string family;
    int max_vertices = 0;
    std::string engine;
    int workers = 1;
    long long instances = 0;  // canonical parameter tuples examined
    std::vector<CollisionGroup> groups;
};

enum class SweepFamily { GS, GSPlus, Paw, Di, K4, All };

SweepFamily parse_sweep_family(const std::string& name);
std::string sweep_family_name(SweepFamily family);

// Enumerates every canonical parameter tuple of the requested family (or all
// five) with vertex count <= max_vertices, computes each profile, and groups
// tuples with exactly equal profiles. Tuples whose canonical form belongs to
// another kind (e.g. gsplus:0,1,1, which is the paw) are skipped so alias
// twins never surface as fake collisions. Output is independent of the worker
// count. The DP engine refuses max_vertices > 20.
CollisionReport sweep(SweepFamily family, int max_vertices,
                      ProfileEngine engine = ProfileEngine::Formula,
                      int workers = 1);

struct VerifyItem {
    std::string name;
    std::vector<FamilySpec> members;
    bool pass = false;
    TreeDistribution profile;  // common profile when pass
};

struct VerifySummary {
    std::vector<VerifyItem> items;
    bool all_pass = true;
};

// Checks exact profile equality for all fam_a triples with s,t <= max_t
// (where the divisibility holds), all fam_b pairs with t <= max_t, and the
// four known glued-star-plus pairs. Failures become report entries, not
// exceptions.
VerifySummary verify_known(int max_t);

// The four known GS+ profile collisions, as (left, right) parameter triples.
extern const std::array<std::pair<std::array<int, 3>, std::array<int, 3>>, 4>
    kKnownGsPlusPairs;

}  // namespace forestprob
