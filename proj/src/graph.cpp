#include "genergy/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "genergy/errors.hpp"

namespace genergy {

Graph::Graph(int n) : n_(n), adj_(std::max(n, 0)) {
    if (n <= 0) throw ParameterError("graph order must be positive, got " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw ParameterError("edge endpoint out of range [0," + std::to_string(n_ - 1) + "]");
    if (u > v) std::swap(u, v);
    Edge e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        throw ParameterError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    edges_.insert(it, e);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    Graph g(n_);
    for (auto e : edges_)
        if (e != Edge{u, v}) g.add_edge(e.first, e.second);
    if (g.num_edges() == num_edges())
        throw ParameterError("edge " + std::to_string(u) + "-" + std::to_string(v) + " not in graph");
    return g;
}

Graph Graph::without_vertices(const std::vector<int>& vs) const {
    std::vector<bool> drop(n_, false);
    for (int v : vs) {
        if (v < 0 || v >= n_) throw ParameterError("vertex out of range: " + std::to_string(v));
        drop[v] = true;
    }
    std::vector<int> newid(n_, -1);
    int k = 0;
    for (int v = 0; v < n_; ++v)
        if (!drop[v]) newid[v] = k++;
    if (k == 0) throw ParameterError("cannot remove all vertices");
    Graph g(k);
    for (auto [u, v] : edges_)
        if (!drop[u] && !drop[v]) g.add_edge(newid[u], newid[v]);
    return g;
}

// ---- families ------------------------------------------------------------

void validate(const FamilySpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) {
                if (s.n < 1) throw ParameterError("path requires n >= 1, got " + std::to_string(s.n));
            } else if constexpr (std::is_same_v<T, CycleSpec>) {
                if (s.n < 3) throw ParameterError("cycle requires n >= 3, got " + std::to_string(s.n));
            } else if constexpr (std::is_same_v<T, TadpoleSpec>) {
                if (s.cycle_len < 3)
                    throw ParameterError("tadpole requires cycle length >= 3, got " +
                                         std::to_string(s.cycle_len));
                if (s.n < s.cycle_len)
                    throw ParameterError("tadpole requires n >= cycle length, got n = " +
                                         std::to_string(s.n));
            } else if constexpr (std::is_same_v<T, P66Spec>) {
                if (s.n < 12) throw ParameterError("p66 requires n >= 12, got " + std::to_string(s.n));
            } else if constexpr (std::is_same_v<T, RSpec>) {
                if (s.a < 3 || s.b < 3)
                    throw ParameterError("r requires cycle lengths >= 3, got " + std::to_string(s.a) +
                                         "," + std::to_string(s.b));
            }
        },
        spec);
}

Graph build(const FamilySpec& spec) {
    validate(spec);
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) {
                Graph g(s.n);
                for (int i = 0; i + 1 < s.n; ++i) g.add_edge(i, i + 1);
                return g;
            } else if constexpr (std::is_same_v<T, CycleSpec>) {
                Graph g(s.n);
                for (int i = 0; i < s.n; ++i) g.add_edge(i, (i + 1) % s.n);
                return g;
            } else if constexpr (std::is_same_v<T, TadpoleSpec>) {
                Graph g(s.n);
                for (int i = 0; i < s.cycle_len; ++i) g.add_edge(i, (i + 1) % s.cycle_len);
                for (int i = s.cycle_len; i < s.n; ++i) g.add_edge(i == s.cycle_len ? 0 : i - 1, i);
                return g;
            } else if constexpr (std::is_same_v<T, P66Spec>) {
                Graph g(s.n);
                for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
                for (int i = 0; i < 6; ++i) g.add_edge(6 + i, 6 + (i + 1) % 6);
                if (s.n == 12) {
                    g.add_edge(0, 6);
                } else {
                    g.add_edge(0, 12);
                    for (int i = 12; i + 1 < s.n; ++i) g.add_edge(i, i + 1);
                    g.add_edge(s.n - 1, 6);
                }
                return g;
            } else {
                static_assert(std::is_same_v<T, RSpec>);
                Graph g(s.a + s.b);
                for (int i = 0; i < s.a; ++i) g.add_edge(i, (i + 1) % s.a);
                for (int i = 0; i < s.b; ++i) g.add_edge(s.a + i, s.a + (i + 1) % s.b);
                g.add_edge(0, s.a);
                return g;
            }
        },
        spec);
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return "path";
            else if constexpr (std::is_same_v<T, CycleSpec>) return "cycle";
            else if constexpr (std::is_same_v<T, TadpoleSpec>) return "tadpole";
            else if constexpr (std::is_same_v<T, P66Spec>) return "p66";
            else return "r";
        },
        spec);
}

// ---- predicates ------------------------------------------------------------

bool is_connected(const Graph& g) {
    int n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == n;
}

bool is_bipartite(const Graph& g, std::vector<int>* coloring) {
    int n = g.num_vertices();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    if (coloring) *coloring = std::move(color);
    return true;
}

bool is_bicyclic(const Graph& g) {
    return g.num_edges() == g.num_vertices() + 1 && is_connected(g);
}

// ---- canonical labeling -----------------------------------------------------

namespace {

// Bitmask adjacency for the canonical search; n <= 64.
struct MaskGraph {
    int n;
    std::vector<std::uint64_t> row;
    explicit MaskGraph(const Graph& g) : n(g.num_vertices()), row(n, 0) {
        for (auto [u, v] : g.edges()) {
            row[u] |= std::uint64_t(1) << v;
            row[v] |= std::uint64_t(1) << u;
        }
    }
};

// Color refinement: repeatedly split color classes by the multiset of
// neighbor colors until stable.
void refine_colors(const MaskGraph& g, std::vector<int>& color) {
    int n = g.n;
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (;;) {
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            std::uint64_t m = g.row[v];
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                nb.push_back(color[w]);
            }
            std::sort(nb.begin(), nb.end());
            nb.push_back(color[v]);
            keys[v] = {std::move(nb), v};
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return keys[a].first < keys[b].first; });
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && keys[order[i]].first != keys[order[i - 1]].first) ++c;
            next[order[i]] = c;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

// Adjacency matrix bits (upper triangle, row-major) under labeling `pos`,
// where pos[v] = new index of v.
std::vector<std::uint64_t> adjacency_code(const MaskGraph& g, const std::vector<int>& pos) {
    int n = g.n;
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[pos[v]] = v;
    std::vector<std::uint64_t> code((n * (n - 1) / 2 + 63) / 64, 0);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.row[inv[i]] >> inv[j] & 1) code[bit / 64] |= std::uint64_t(1) << (bit % 64);
            ++bit;
        }
    return code;
}

struct CanonSearch {
    const MaskGraph& g;
    std::vector<std::uint64_t> best;
    bool have_best = false;

    explicit CanonSearch(const MaskGraph& gr) : g(gr) {}

    void run(std::vector<int> color) {
        refine_colors(g, color);
        // cells[c] = vertices of color c
        int n = g.n;
        int ncolors = 0;
        for (int v = 0; v < n; ++v) ncolors = std::max(ncolors, color[v] + 1);
        if (ncolors == n) {
            std::vector<int> pos(n);
            for (int v = 0; v < n; ++v) pos[v] = color[v];
            auto code = adjacency_code(g, pos);
            if (!have_best || code < best) {
                best = std::move(code);
                have_best = true;
            }
            return;
        }
        // first non-singleton color class
        std::vector<std::vector<int>> cells(ncolors);
        for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
        int target = 0;
        while (static_cast<int>(cells[target].size()) <= 1) ++target;
        for (int v : cells[target]) {
            std::vector<int> next(n);
            // individualize v: give it a color just below its cell
            for (int w = 0; w < n; ++w) next[w] = 2 * color[w] + 1;
            next[v] = 2 * color[v];
            run(std::move(next));
        }
    }
};

std::vector<Edge> edges_of_code(int n, const std::vector<std::uint64_t>& code) {
    std::vector<Edge> out;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (code[bit / 64] >> (bit % 64) & 1) out.push_back({i, j});
            ++bit;
        }
    return out;
}

}  // namespace

std::vector<Edge> canonical_form(const Graph& g) {
    if (g.num_vertices() > 64)
        throw CapacityError("canonical_form supports at most 64 vertices, got " +
                            std::to_string(g.num_vertices()));
    MaskGraph mg(g);
    CanonSearch search(mg);
    search.run(std::vector<int>(g.num_vertices(), 0));
    return edges_of_code(g.num_vertices(), search.best);
}

std::string canonical_key(const Graph& g) {
    if (g.num_vertices() > 64)
        throw CapacityError("canonical_key supports at most 64 vertices, got " +
                            std::to_string(g.num_vertices()));
    MaskGraph mg(g);
    CanonSearch search(mg);
    search.run(std::vector<int>(g.num_vertices(), 0));
    std::string key;
    key.reserve(8 + search.best.size() * 8);
    key += std::to_string(g.num_vertices());
    key += ':';
    for (auto w : search.best)
        for (int b = 0; b < 64; ++b) key += (w >> b & 1) ? '1' : '0';
    return key;
}

// ---- enumeration ------------------------------------------------------------

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw ParameterError("enumerate_trees requires n >= 1");
    std::vector<Graph> cur;
    cur.push_back(Graph(1));
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& t : cur) {
            for (int v = 0; v < t.num_vertices(); ++v) {
                Graph bigger(k);
                for (auto [a, b] : t.edges()) bigger.add_edge(a, b);
                bigger.add_edge(v, k - 1);
                next.emplace(canonical_key(bigger), bigger);
            }
        }
        cur.clear();
        for (auto& [key, t] : next) cur.push_back(std::move(t));
    }
    return cur;
}

namespace {

// Adds every cross-color non-edge of each input graph, dedups canonically.
// Inputs must be connected and bipartite (their 2-coloring is then unique up
// to swapping sides, so cross-color augmentation reaches every bipartite
// supergraph with one more edge).
std::map<std::string, Graph> augment_bipartite(const std::vector<Graph>& reps,
                                               std::uint64_t shuffle_seed) {
    std::map<std::string, Graph> out;
    for (const Graph& g : reps) {
        std::vector<int> color;
        if (!is_bipartite(g, &color)) continue;
        std::vector<Edge> candidates;
        for (int u = 0; u < g.num_vertices(); ++u)
            for (int v = u + 1; v < g.num_vertices(); ++v)
                if (color[u] != color[v] && !g.has_edge(u, v)) candidates.push_back({u, v});
        if (shuffle_seed != 0) {
            std::mt19937_64 rng(shuffle_seed);
            std::shuffle(candidates.begin(), candidates.end(), rng);
        }
        for (auto [u, v] : candidates) {
            Graph h(g.num_vertices(), g.edges());
            h.add_edge(u, v);
            out.emplace(canonical_key(h), std::move(h));
        }
    }
    return out;
}

}  // namespace

std::vector<Graph> enumerate_bipartite_bicyclic(int n, int cap, std::uint64_t shuffle_seed) {
    if (n < 4) throw ParameterError("enumeration requires n >= 4, got " + std::to_string(n));
    if (n > cap)
        throw CapacityError("enumeration capped at n = " + std::to_string(cap) + ", got " +
                            std::to_string(n));
    std::vector<Graph> trees = enumerate_trees(n);
    auto unicyclic = augment_bipartite(trees, shuffle_seed);
    std::vector<Graph> ureps;
    ureps.reserve(unicyclic.size());
    for (auto& [key, g] : unicyclic) ureps.push_back(std::move(g));
    auto bicyclic = augment_bipartite(ureps, shuffle_seed);
    std::vector<Graph> out;
    out.reserve(bicyclic.size());
    for (auto& [key, g] : bicyclic) out.push_back(std::move(g));
    return out;
}

// ---- serialization -----------------------------------------------------------

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream os;
    os << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("missing 'n m' header", 1);
    std::istringstream hs(line);
    int n, m;
    if (!(hs >> n >> m)) throw ParseError("malformed 'n m' header", lineno);
    if (n <= 0) throw ParseError("vertex count must be positive", lineno);
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError("expected " + std::to_string(m) + " edges", lineno + 1);
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v)) throw ParseError("malformed edge", lineno);
        try {
            g.add_edge(u, v);
        } catch (const ParameterError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (next_line()) throw ParseError("trailing content after edge list", lineno);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.num_vertices() + b.num_vertices());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.num_vertices() + u, a.num_vertices() + v);
    return g;
}

}  // namespace genergy
