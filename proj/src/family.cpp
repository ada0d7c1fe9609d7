#include "forestprob/family.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "forestprob/errors.hpp"

namespace forestprob {

std::string kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Star: return "star";
        case FamilyKind::Triangle: return "triangle";
        case FamilyKind::GS: return "gs";
        case FamilyKind::GSPlus: return "gsplus";
        case FamilyKind::Paw: return "paw";
        case FamilyKind::Di: return "di";
        case FamilyKind::K4: return "k4";
        case FamilyKind::Complete: return "k";
        case FamilyKind::CompleteBipartite: return "kst";
    }
    throw SpecError("unknown family kind");
}

FamilySpec FamilySpec::star(int n) {
    if (n < 1) throw SpecError("star needs at least one edge");
    return {FamilyKind::Star, {n}};
}

FamilySpec FamilySpec::triangle() { return {FamilyKind::Triangle, {}}; }

FamilySpec FamilySpec::gs(int a, int b, int c) {
    if (a < 0 || c < 0) throw SpecError("gs leaf counts must be non-negative");
    if (b < 1) throw SpecError("gs needs at least one glued leaf");
    if (a > c) std::swap(a, c);
    return {FamilyKind::GS, {a, b, c}};
}

FamilySpec FamilySpec::gs_plus(int a, int b, int c) {
    if (a < 0 || c < 0) throw SpecError("gsplus leaf counts must be non-negative");
    if (b < 1) throw SpecError("gsplus needs at least one glued leaf");
    if (a > c) std::swap(a, c);
    return {FamilyKind::GSPlus, {a, b, c}};
}

FamilySpec FamilySpec::paw(int a) {
    if (a < 0) throw SpecError("paw leaf count must be non-negative");
    return {FamilyKind::Paw, {a}};
}

FamilySpec FamilySpec::di(int a) {
    if (a < 0) throw SpecError("di leaf count must be non-negative");
    return {FamilyKind::Di, {a}};
}

FamilySpec FamilySpec::k4(int a) {
    if (a < 0) throw SpecError("k4 leaf count must be non-negative");
    return {FamilyKind::K4, {a}};
}

FamilySpec FamilySpec::complete(int n) {
    if (n < 2) throw SpecError("complete graph needs at least two vertices");
    return {FamilyKind::Complete, {n}};
}

FamilySpec FamilySpec::complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw SpecError("complete bipartite parts must be non-empty");
    if (s > t) std::swap(s, t);
    return {FamilyKind::CompleteBipartite, {s, t}};
}

int FamilySpec::vertex_count() const {
    switch (kind) {
        case FamilyKind::Star: return params[0] + 1;
        case FamilyKind::Triangle: return 3;
        case FamilyKind::GS:
        case FamilyKind::GSPlus: return params[0] + params[1] + params[2] + 2;
        case FamilyKind::Paw:
        case FamilyKind::Di:
        case FamilyKind::K4: return params[0] + 4;
        case FamilyKind::Complete: return params[0];
        case FamilyKind::CompleteBipartite: return params[0] + params[1];
    }
    throw SpecError("unknown family kind");
}

std::string FamilySpec::to_string() const {
    std::string out = kind_name(kind);
    for (size_t i = 0; i < params.size(); ++i) {
        out += (i == 0 ? ':' : ',');
        out += std::to_string(params[i]);
    }
    return out;
}

FamilySpec FamilySpec::parse(const std::string& text) {
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        size_t e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    std::string s = trim(text);
    std::string name = s;
    std::vector<int> params;
    if (size_t colon = s.find(':'); colon != std::string::npos) {
        name = trim(s.substr(0, colon));
        std::string rest = s.substr(colon + 1);
        std::istringstream in(rest);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            tok = trim(tok);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
                    return std::isdigit(c);
                }))
                throw ParseError("family parameter '" + tok + "' is not a non-negative integer");
            try {
                params.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("family parameter '" + tok + "' is out of range");
            }
        }
        if (rest.empty() || rest.back() == ',')
            throw ParseError("trailing comma in family parameters");
    }
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });

    auto arity = [&](size_t want) {
        if (params.size() != want)
            throw ParseError("family '" + name + "' takes " + std::to_string(want) +
                             " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "star") { arity(1); return star(params[0]); }
    if (name == "triangle") { arity(0); return triangle(); }
    if (name == "gs") { arity(3); return gs(params[0], params[1], params[2]); }
    if (name == "gsplus") { arity(3); return gs_plus(params[0], params[1], params[2]); }
    if (name == "paw") { arity(1); return paw(params[0]); }
    if (name == "di") { arity(1); return di(params[0]); }
    if (name == "k4") { arity(1); return k4(params[0]); }
    if (name == "k") { arity(1); return complete(params[0]); }
    if (name == "kst") { arity(2); return complete_bipartite(params[0], params[1]); }
    throw ParseError("unknown family '" + name + "'");
}

FamilySpec canonical(const FamilySpec& spec) {
    FamilySpec cur = spec;
    for (;;) {
        switch (cur.kind) {
            case FamilyKind::Complete: {
                int n = cur.params[0];
                if (n == 2) cur = FamilySpec::star(1);
                else if (n == 3) cur = FamilySpec::triangle();
                else if (n == 4) cur = FamilySpec::k4(0);
                else return cur;
                break;
            }
            case FamilyKind::CompleteBipartite: {
                int s = cur.params[0], t = cur.params[1];
                if (s == 1) cur = FamilySpec::star(t);
                else if (s == 2) cur = FamilySpec::gs(0, t, 0);
                else return cur;
                break;
            }
            case FamilyKind::GS:
                if (cur.params == std::vector<int>{0, 1, 0}) cur = FamilySpec::star(2);
                else return cur;
                break;
            case FamilyKind::GSPlus:
                if (cur.params == std::vector<int>{0, 1, 0}) cur = FamilySpec::triangle();
                else if (cur.params == std::vector<int>{0, 1, 1}) cur = FamilySpec::paw(0);
                else if (cur.params == std::vector<int>{0, 2, 0}) cur = FamilySpec::di(0);
                else return cur;
                break;
            default:
                return cur;
        }
    }
}

Graph construct_family(const FamilySpec& spec) {
    const auto& p = spec.params;
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
        case FamilyKind::Star:
            for (int i = 1; i <= p[0]; ++i) edges.emplace_back(0, i);
            break;
        case FamilyKind::Triangle:
            edges = {{0, 1}, {0, 2}, {1, 2}};
            break;
        case FamilyKind::GS:
        case FamilyKind::GSPlus: {
            int a = p[0], b = p[1], c = p[2];
            for (int i = 0; i < b; ++i) edges.emplace_back(0, 2 + i);
            for (int i = 0; i < a; ++i) edges.emplace_back(0, 2 + b + i);
            for (int i = 0; i < b; ++i) edges.emplace_back(1, 2 + i);
            for (int i = 0; i < c; ++i) edges.emplace_back(1, 2 + b + a + i);
            if (spec.kind == FamilyKind::GSPlus) edges.emplace_back(0, 1);
            break;
        }
        case FamilyKind::Paw:
            edges = {{0, 1}, {1, 2}, {1, 3}, {2, 3}};
            for (int i = 0; i < p[0]; ++i) edges.emplace_back(0, 4 + i);
            break;
        case FamilyKind::Di:
            edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
            for (int i = 0; i < p[0]; ++i) edges.emplace_back(2, 4 + i);
            break;
        case FamilyKind::K4:
            edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
            for (int i = 0; i < p[0]; ++i) edges.emplace_back(0, 4 + i);
            break;
        case FamilyKind::Complete:
            for (int i = 0; i < p[0]; ++i)
                for (int j = i + 1; j < p[0]; ++j) edges.emplace_back(i, j);
            break;
        case FamilyKind::CompleteBipartite:
            for (int i = 0; i < p[0]; ++i)
                for (int j = 0; j < p[1]; ++j) edges.emplace_back(i, p[0] + j);
            break;
    }
    return Graph::from_edges(spec.vertex_count(), std::move(edges));
}

namespace {

struct AdjView {
    std::vector<std::vector<int>> nbr;
    explicit AdjView(const Graph& g) : nbr(g.adjacency()) {
        for (auto& v : nbr) std::sort(v.begin(), v.end());
    }
    bool has(int u, int v) const {
        return std::binary_search(nbr[u].begin(), nbr[u].end(), v);
    }
    int deg(int v) const { return static_cast<int>(nbr[v].size()); }
};

// Vertices surviving repeated removal of degree-<=1 vertices.
std::vector<char> two_core(const Graph& g, const AdjView& adj) {
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = adj.deg(v);
    std::vector<char> in(g.n, 1);
    std::vector<int> queue;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] <= 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (!in[v]) continue;
        in[v] = 0;
        for (int w : adj.nbr[v])
            if (in[w] && --deg[w] == 1) queue.push_back(w);
    }
    return in;
}

std::vector<int> core_vertices(const std::vector<char>& in) {
    std::vector<int> cv;
    for (int v = 0; v < static_cast<int>(in.size()); ++v)
        if (in[v]) cv.push_back(v);
    return cv;
}

int core_degree(const AdjView& adj, const std::vector<char>& in, int v) {
    int d = 0;
    for (int w : adj.nbr[v])
        if (in[w]) ++d;
    return d;
}

std::optional<FamilySpec> recognize_paw(const Graph& g, const AdjView& adj,
                                        const std::vector<char>& core) {
    auto cv = core_vertices(core);
    if (cv.size() != 3) return std::nullopt;
    if (!adj.has(cv[0], cv[1]) || !adj.has(cv[0], cv[2]) || !adj.has(cv[1], cv[2]))
        return std::nullopt;
    int x = -1;
    for (int v : cv) {
        if (adj.deg(v) == 3) {
            if (x >= 0) return std::nullopt;
            x = v;
        } else if (adj.deg(v) != 2) {
            return std::nullopt;
        }
    }
    if (x < 0) return std::nullopt;
    int s = -1;
    for (int w : adj.nbr[x])
        if (!core[w]) s = w;
    if (s < 0) return std::nullopt;
    for (int v = 0; v < g.n; ++v) {
        if (core[v] || v == s) continue;
        if (adj.deg(v) != 1 || adj.nbr[v][0] != s) return std::nullopt;
    }
    return FamilySpec::paw(g.n - 4);
}

// Shared tail for the diamond and K4 shapes: every vertex off the core must be
// a leaf, and all leaves must hang off one core vertex with the given core
// degree (-1 accepts any).
std::optional<int> pendant_count(const Graph& g, const AdjView& adj,
                                 const std::vector<char>& core, int want_core_deg) {
    int w = -1;
    int count = 0;
    for (int v = 0; v < g.n; ++v) {
        if (core[v]) continue;
        if (adj.deg(v) != 1) return std::nullopt;
        int u = adj.nbr[v][0];
        if (!core[u]) return std::nullopt;
        if (w < 0) {
            if (want_core_deg >= 0 && core_degree(adj, core, u) != want_core_deg)
                return std::nullopt;
            w = u;
        } else if (u != w) {
            return std::nullopt;
        }
        ++count;
    }
    return count;
}

std::optional<FamilySpec> recognize_di(const Graph& g, const AdjView& adj,
                                       const std::vector<char>& core) {
    auto cv = core_vertices(core);
    if (cv.size() != 4) return std::nullopt;
    int core_edges = 0;
    for (size_t i = 0; i < cv.size(); ++i)
        for (size_t j = i + 1; j < cv.size(); ++j)
            if (adj.has(cv[i], cv[j])) ++core_edges;
    if (core_edges != 5) return std::nullopt;  // 4 vertices, 5 edges: the diamond
    auto leaves = pendant_count(g, adj, core, 2);
    if (!leaves) return std::nullopt;
    return FamilySpec::di(*leaves);
}

std::optional<FamilySpec> recognize_k4(const Graph& g, const AdjView& adj,
                                       const std::vector<char>& core) {
    auto cv = core_vertices(core);
    if (cv.size() != 4) return std::nullopt;
    for (size_t i = 0; i < cv.size(); ++i)
        for (size_t j = i + 1; j < cv.size(); ++j)
            if (!adj.has(cv[i], cv[j])) return std::nullopt;
    auto leaves = pendant_count(g, adj, core, -1);
    if (!leaves) return std::nullopt;
    return FamilySpec::k4(*leaves);
}

// Checks whether x,y work as the two star centers: every other vertex must
// have all its neighbors inside {x,y}. Returns (only-x, both, only-y) counts.
std::optional<std::array<int, 3>> center_split(const Graph& g, const AdjView& adj,
                                               int x, int y) {
    int a = 0, b = 0, c = 0;
    for (int v = 0; v < g.n; ++v) {
        if (v == x || v == y) continue;
        bool ax = adj.has(v, x);
        bool ay = adj.has(v, y);
        if (adj.deg(v) != (ax ? 1 : 0) + (ay ? 1 : 0) || adj.deg(v) == 0)
            return std::nullopt;
        if (ax && ay) ++b;
        else if (ax) ++a;
        else ++c;
    }
    if (b < 1) return std::nullopt;
    return std::array{a, b, c};
}

std::optional<FamilySpec> recognize_gs(const Graph& g, const AdjView& adj) {
    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y) {
            if (adj.has(x, y)) continue;
            if (auto split = center_split(g, adj, x, y))
                return FamilySpec::gs((*split)[0], (*split)[1], (*split)[2]);
        }
    return std::nullopt;
}

std::optional<FamilySpec> recognize_gsplus(const Graph& g, const AdjView& adj) {
    for (const auto& [x, y] : g.edges)
        if (auto split = center_split(g, adj, std::min(x, y), std::max(x, y)))
            return FamilySpec::gs_plus((*split)[0], (*split)[1], (*split)[2]);
    return std::nullopt;
}

}  // namespace

std::string Classification::describe() const {
    if (family) return family->to_string();
    if (matching_cap3 >= 3) return "unclassified (matching number >= 3)";
    return "unclassified (other)";
}

Classification classify(const Graph& g) {
    if (g.has_isolated_vertex())
        throw SpecError("classify requires a graph without isolated vertices");
    Classification result;
    result.matching_cap3 = max_disjoint_edges_capped(g, 3);
    if (result.matching_cap3 == 0) return result;  // edgeless (n == 0)
    if (result.matching_cap3 == 1) {
        if (g.n == 3 && g.edge_count() == 3) {
            result.family = FamilySpec::triangle();
            return result;
        }
        const auto deg = g.degrees();
        const int m = g.edge_count();
        for (int v = 0; v < g.n; ++v) {
            if (deg[v] == m && g.n == m + 1) {
                result.family = FamilySpec::star(m);
                return result;
            }
        }
        return result;
    }
    if (result.matching_cap3 >= 3) return result;
    if (!g.connected()) return result;

    AdjView adj(g);
    const auto core = two_core(g, adj);
    // Order matters: the pendant shapes absorb their glued-star aliases.
    if (auto f = recognize_paw(g, adj, core)) { result.family = *f; return result; }
    if (auto f = recognize_di(g, adj, core)) { result.family = *f; return result; }
    if (auto f = recognize_k4(g, adj, core)) { result.family = *f; return result; }
    if (auto f = recognize_gs(g, adj)) { result.family = *f; return result; }
    if (auto f = recognize_gsplus(g, adj)) { result.family = *f; return result; }
    return result;
}

}  // namespace forestprob
