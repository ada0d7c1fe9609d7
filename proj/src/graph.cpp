#include "forestprob/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

namespace forestprob {

namespace {

std::pair<int, int> sorted_pair(int u, int v) {
    return u < v ? std::pair{u, v} : std::pair{v, u};
}

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw SpecError("vertex count must be non-negative");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw SpecError("edge endpoint out of range: (" + std::to_string(u) +
                            "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw SpecError("self-loop at vertex " + std::to_string(u));
        if (!seen.insert(sorted_pair(u, v)).second)
            throw SpecError("duplicate edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
    }
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool Graph::has_isolated_vertex() const {
    const auto deg = degrees();
    return std::any_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
}

bool Graph::connected() const {
    if (n <= 1) return true;
    const auto adj = adjacency();
    std::vector<char> visited(n, 0);
    std::vector<int> stack = {0};
    visited[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!visited[w]) {
                visited[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int header_n = -1;
    int max_index = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    auto parse_index = [&](const std::string& tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                        [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected a non-negative vertex index, got '" + tok + "'");
        try {
            return std::stoi(tok);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": vertex index '" +
                             tok + "' out of range");
        }
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("n=", 0) == 0) {
            if (header_n >= 0)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate n= header");
            header_n = parse_index(trim(line.substr(2)));
            continue;
        }
        std::istringstream toks(line);
        std::string a, b, extra;
        if (!(toks >> a >> b) || (toks >> extra))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected exactly two vertex indices");
        int u = parse_index(a);
        int v = parse_index(b);
        if (u == v)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                             std::to_string(u));
        if (!seen.insert(sorted_pair(u, v)).second)
            throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                             std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }

    int n = max_index + 1;
    if (header_n >= 0) {
        if (header_n < n)
            throw ParseError("n= header gives " + std::to_string(header_n) +
                             " vertices but an edge references index " +
                             std::to_string(max_index));
        n = header_n;
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    int max_index = -1;
    for (const auto& [u, v] : g.edges) max_index = std::max({max_index, u, v});
    if (g.n != max_index + 1) out << "n=" << g.n << "\n";
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

namespace {

constexpr int kG6Offset = 63;
constexpr char kG6Prefix[] = ">>graph6<<";

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = trim(text);
    if (s.rfind(kG6Prefix, 0) == 0) s = s.substr(sizeof(kG6Prefix) - 1);
    if (s.empty()) throw ParseError("empty graph6 string");
    for (unsigned char c : s)
        if (c < kG6Offset || c > 126)
            throw ParseError("graph6 byte out of printable range");

    size_t pos = 0;
    long long n = 0;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126)
            throw ParseError("graph6 8-byte vertex counts are not supported");
        if (s.size() < 4) throw ParseError("truncated graph6 vertex count");
        n = (static_cast<long long>(s[1] - kG6Offset) << 12) |
            (static_cast<long long>(s[2] - kG6Offset) << 6) |
            static_cast<long long>(s[3] - kG6Offset);
        pos = 4;
    } else {
        n = s[0] - kG6Offset;
        pos = 1;
    }

    long long bits = n * (n - 1) / 2;
    size_t expect = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - pos != expect)
        throw ParseError("graph6 bit vector has " + std::to_string(s.size() - pos) +
                         " bytes, expected " + std::to_string(expect));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[pos + bit / 6] - kG6Offset;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Trailing pad bits must be zero.
    for (long long b = bits; b < static_cast<long long>(expect) * 6; ++b) {
        int byte = s[pos + b / 6] - kG6Offset;
        if ((byte >> (5 - b % 6)) & 1)
            throw ParseError("graph6 padding bits are not zero");
    }
    std::sort(edges.begin(), edges.end());
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string emit_graph6(const Graph& g) {
    if (g.n >= 258048)
        throw SpecError("graph6 emission supports fewer than 258048 vertices");
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + kG6Offset));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((g.n >> 12) & 0x3f) + kG6Offset));
        out.push_back(static_cast<char>(((g.n >> 6) & 0x3f) + kG6Offset));
        out.push_back(static_cast<char>((g.n & 0x3f) + kG6Offset));
    }
    long long bits = static_cast<long long>(g.n) * (g.n - 1) / 2;
    std::vector<char> bitvec(static_cast<size_t>(bits), 0);
    auto index = [](int i, int j) {  // i < j, column-major upper triangle
        return static_cast<long long>(j) * (j - 1) / 2 + i;
    };
    for (const auto& [u, v] : g.edges) {
        auto [i, j] = sorted_pair(u, v);
        bitvec[static_cast<size_t>(index(i, j))] = 1;
    }
    for (long long b = 0; b < bits; b += 6) {
        int byte = 0;
        for (int k = 0; k < 6; ++k)
            if (b + k < bits && bitvec[static_cast<size_t>(b + k)]) byte |= 1 << (5 - k);
        out.push_back(static_cast<char>(byte + kG6Offset));
    }
    return out;
}

Graph strip_isolated(const Graph& g) {
    const auto deg = g.degrees();
    std::vector<int> remap(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] > 0) remap[v] = next++;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) edges.emplace_back(remap[u], remap[v]);
    return Graph::from_edges(next, std::move(edges));
}

int max_disjoint_edges_capped(const Graph& g, int cap) {
    if (cap < 1 || cap > 3) throw SpecError("cap must be 1, 2 or 3");
    const int m = g.edge_count();
    if (m == 0) return 0;
    if (cap == 1) return 1;

    std::vector<std::uint64_t> masks(m);
    for (int i = 0; i < m; ++i)
        masks[i] = (1ULL << g.edges[i].first) | (1ULL << g.edges[i].second);
    // n > 64 would overflow the endpoint masks; fall back to pair tests.
    const bool use_masks = g.n <= 64;
    auto disjoint = [&](int i, int j) {
        if (use_masks) return (masks[i] & masks[j]) == 0;
        const auto& a = g.edges[i];
        const auto& b = g.edges[j];
        return a.first != b.first && a.first != b.second && a.second != b.first &&
               a.second != b.second;
    };

    bool pair_found = false;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (!disjoint(i, j)) continue;
            if (cap == 2) return 2;
            pair_found = true;
            for (int k = j + 1; k < m; ++k)
                if (disjoint(i, k) && disjoint(j, k)) return 3;
        }
    }
    return pair_found ? 2 : 1;
}

namespace {

bool isomorphic_backtrack(const std::vector<std::uint16_t>& gadj,
                          const std::vector<std::uint16_t>& hadj,
                          const std::vector<int>& gdeg, const std::vector<int>& hdeg,
                          const std::vector<int>& order, std::vector<int>& image,
                          std::uint16_t used, size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < static_cast<int>(hadj.size()); ++w) {
        if (used & (1u << w)) continue;
        if (hdeg[w] != gdeg[v]) continue;
        bool ok = true;
        for (size_t p = 0; p < pos; ++p) {
            int u = order[p];
            bool ge = (gadj[v] >> u) & 1;
            bool he = (hadj[w] >> image[u]) & 1;
            if (ge != he) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[v] = w;
        if (isomorphic_backtrack(gadj, hadj, gdeg, hdeg, order, image,
                                 used | (1u << w), pos + 1))
            return true;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n > kIsomorphismMaxVertices || h.n > kIsomorphismMaxVertices)
        throw GuardError("isomorphism check limited to " +
                         std::to_string(kIsomorphismMaxVertices) + " vertices");
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;

    const auto gdeg = g.degrees();
    const auto hdeg = h.degrees();
    auto gsorted = gdeg;
    auto hsorted = hdeg;
    std::sort(gsorted.begin(), gsorted.end());
    std::sort(hsorted.begin(), hsorted.end());
    if (gsorted != hsorted) return false;

    std::vector<std::uint16_t> gadj(g.n, 0), hadj(h.n, 0);
    for (const auto& [u, v] : g.edges) {
        gadj[u] |= static_cast<std::uint16_t>(1u << v);
        gadj[v] |= static_cast<std::uint16_t>(1u << u);
    }
    for (const auto& [u, v] : h.edges) {
        hadj[u] |= static_cast<std::uint16_t>(1u << v);
        hadj[v] |= static_cast<std::uint16_t>(1u << u);
    }

    // High-degree vertices first narrows the branching early.
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return gdeg[a] > gdeg[b]; });

    std::vector<int> image(g.n, -1);
    return isomorphic_backtrack(gadj, hadj, gdeg, hdeg, order, image, 0, 0);
}

}  // namespace forestprob
