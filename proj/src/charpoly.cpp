#include "genergy/charpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "genergy/errors.hpp"

namespace genergy {

namespace {

// Bareiss fraction-free determinant; exact for integer matrices.
Int det_bareiss(std::vector<std::vector<Int>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

IntPoly charpoly_direct(const Graph& g) {
    int n = g.num_vertices();
    // values[k] = det(kI - A), k = 0..n
    std::vector<Int> values(n + 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
        for (int i = 0; i < n; ++i) m[i][i] = k;
        for (auto [u, v] : g.edges()) {
            m[u][v] = -1;
            m[v][u] = -1;
        }
        values[k] = det_bareiss(std::move(m));
    }
    // Newton forward differences at 0..n: p(x) = sum_k d_k * binom(x, k) * k!/k!
    // d_k = Delta^k p(0) / k! are integers for integer-valued polynomials.
    std::vector<Int> diff = values;
    std::vector<Int> newton(n + 1);
    Int fact(1);
    newton[0] = diff[0];
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i <= n - k; ++i) diff[i] = diff[i + 1] - diff[i];
        fact *= k;
        newton[k] = diff[0] / fact;
    }
    // Expand sum_k newton[k] * x(x-1)...(x-k+1)
    IntPoly result = IntPoly::constant(newton[0]);
    IntPoly basis = IntPoly::constant(Int(1));
    for (int k = 1; k <= n; ++k) {
        basis = basis * IntPoly({Int(-(k - 1)), Int(1)});
        result = result + basis * newton[k];
    }
    return result;
}

IntPoly phi_path_poly(int n) {
    if (n < 0) throw ParameterError("path polynomial requires n >= 0");
    IntPoly prev = IntPoly::constant(Int(1));  // phi(P_0)
    if (n == 0) return prev;
    IntPoly cur = IntPoly::x();
    for (int k = 2; k <= n; ++k) {
        IntPoly next = IntPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly phi_cycle_poly(int n) {
    if (n < 3) throw ParameterError("cycle polynomial requires n >= 3, got " + std::to_string(n));
    return phi_path_poly(n) - phi_path_poly(n - 2) - IntPoly::constant(Int(2));
}

IntPoly phi_tadpole_poly(int n, int cycle_len) {
    validate(TadpoleSpec{n, cycle_len});
    IntPoly prev = phi_cycle_poly(cycle_len);
    if (n == cycle_len) return prev;
    // pendant-edge expansion at the first tail vertex
    IntPoly cur = IntPoly::x() * prev - phi_path_poly(cycle_len - 1);
    for (int k = cycle_len + 2; k <= n; ++k) {
        IntPoly next = IntPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly phi_p66_poly(int n) {
    validate(P66Spec{n});
    const IntPoly c6 = phi_cycle_poly(6);
    const IntPoly p5 = phi_path_poly(5);
    // n = 12: two hexagons joined by an edge, the a = b = 6 case of the
    // R-product formula. n = 13: bridge expansion through the middle vertex.
    IntPoly prev = c6 * c6 - p5 * p5;
    if (n == 12) return prev;
    IntPoly cur = c6 * (IntPoly::x() * c6 - p5 * Int(2));
    for (int k = 14; k <= n; ++k) {
        IntPoly next = IntPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly phi_r_poly(int a, int b) {
    validate(RSpec{a, b});
    return phi_cycle_poly(a) * phi_cycle_poly(b) - phi_path_poly(a - 1) * phi_path_poly(b - 1);
}

IntPoly charpoly_by_recursion(const FamilySpec& spec) {
    validate(spec);
    return std::visit(
        [](const auto& s) -> IntPoly {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return phi_path_poly(s.n);
            else if constexpr (std::is_same_v<T, CycleSpec>) return phi_cycle_poly(s.n);
            else if constexpr (std::is_same_v<T, TadpoleSpec>) return phi_tadpole_poly(s.n, s.cycle_len);
            else if constexpr (std::is_same_v<T, P66Spec>) return phi_p66_poly(s.n);
            else return phi_r_poly(s.a, s.b);
        },
        spec);
}

namespace {

// All cycles through edge uv, each as a vertex list. Simple paths from u to v
// avoiding the edge itself; exhaustive DFS (the target graphs have at most a
// handful of cycles).
std::vector<std::vector<int>> cycles_through(const Graph& g, int u, int v) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> path{u};
    std::vector<bool> used(g.num_vertices(), false);
    used[u] = true;
    std::function<void(int)> dfs = [&](int cur) {
        for (int w : g.neighbors(cur)) {
            if (w == v && !(cur == u)) {  // path of length >= 2 closes a cycle with uv
                path.push_back(v);
                cycles.push_back(path);
                path.pop_back();
                continue;
            }
            if (!used[w] && w != v) {
                used[w] = true;
                path.push_back(w);
                dfs(w);
                path.pop_back();
                used[w] = false;
            }
        }
    };
    dfs(u);
    return cycles;
}

class RecursionEngine {
  public:
    IntPoly phi(const Graph& g) {
        // strip isolated vertices: each contributes a factor x
        std::vector<int> isolated;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.degree(v) == 0) isolated.push_back(v);
        if (static_cast<int>(isolated.size()) == g.num_vertices())
            return IntPoly::monomial(Int(1), g.num_vertices());
        if (!isolated.empty())
            return phi(g.without_vertices(isolated)) *
                   IntPoly::monomial(Int(1), static_cast<int>(isolated.size()));

        std::string key = canonical_key(g);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        IntPoly result = compute(g);
        memo_.emplace(std::move(key), result);
        return result;
    }

    // phi(g) with the listed vertices removed; phi(empty graph) = 1.
    IntPoly phi_minus(const Graph& g, const std::vector<int>& vs) {
        if (static_cast<int>(vs.size()) == g.num_vertices()) return IntPoly::constant(Int(1));
        return phi(g.without_vertices(vs));
    }

    // Proposition-2 expansion of phi(g) at edge {u,v}.
    IntPoly expand_at(const Graph& g, int u, int v) {
        if (!g.has_edge(u, v))
            throw ParameterError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                 " not in graph");
        IntPoly result = phi(g.without_edge(u, v)) - phi_minus(g, {u, v});
        for (const auto& cyc : cycles_through(g, u, v)) {
            result = result - phi_minus(g, cyc) * Int(2);
        }
        return result;
    }

  private:
    IntPoly compute(const Graph& g) {
        // split off connected components
        std::vector<int> comp(g.num_vertices(), -1);
        int ncomp = 0;
        for (int s = 0; s < g.num_vertices(); ++s) {
            if (comp[s] != -1) continue;
            std::vector<int> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(x))
                    if (comp[w] == -1) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
            }
            ++ncomp;
        }
        if (ncomp > 1) {
            IntPoly result = IntPoly::constant(Int(1));
            for (int c = 0; c < ncomp; ++c) {
                std::vector<int> others;
                for (int v = 0; v < g.num_vertices(); ++v)
                    if (comp[v] != c) others.push_back(v);
                result = result * phi(g.without_vertices(others));
            }
            return result;
        }
        if (g.num_vertices() == 1) return IntPoly::x();
        // prefer a pendant edge: phi(G) = x phi(G - v) - phi(G - u - v)
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (g.degree(v) == 1) {
                int u = g.neighbors(v)[0];
                return IntPoly::x() * phi_minus(g, {v}) - phi_minus(g, {u, v});
            }
        }
        auto [u, v] = g.edges().front();
        return expand_at(g, u, v);
    }

    std::map<std::string, IntPoly> memo_;
};

}  // namespace

IntPoly edge_deletion_recursion(const Graph& g, Edge e) {
    RecursionEngine engine;
    return engine.expand_at(g, e.first, e.second);
}

IntPoly component_product(const Graph& g) {
    std::vector<int> comp(g.num_vertices(), -1);
    int ncomp = 0;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(x))
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    IntPoly result = IntPoly::constant(Int(1));
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> others;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (comp[v] != c) others.push_back(v);
        Graph sub = others.empty() ? g : g.without_vertices(others);
        result = result * charpoly_direct(sub);
    }
    return result;
}

namespace {

Int count_matchings(const Graph& g, int k, size_t edge_idx, std::vector<bool>& used) {
    if (k == 0) return Int(1);
    if (edge_idx >= g.edges().size()) return Int(0);
    if (static_cast<int>(g.edges().size() - edge_idx) < k) return Int(0);
    auto [u, v] = g.edges()[edge_idx];
    Int total = count_matchings(g, k, edge_idx + 1, used);
    if (!used[u] && !used[v]) {
        used[u] = used[v] = true;
        total += count_matchings(g, k - 1, edge_idx + 1, used);
        used[u] = used[v] = false;
    }
    return total;
}

}  // namespace

Int matching_count(const Graph& g, int k) {
    if (k < 0) throw ParameterError("matching size must be >= 0");
    std::vector<bool> used(g.num_vertices(), false);
    return count_matchings(g, k, 0, used);
}

}  // namespace genergy
