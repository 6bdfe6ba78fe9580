#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace genergy {

using Edge = std::pair<int, int>;  // stored with first < second

// Simple undirected graph on vertices {0, ..., n-1}. No loops, no multi-edges.
class Graph {
  public:
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    void add_edge(int u, int v);

    // Copies with parts removed; remaining vertices are relabeled 0..k-1
    // preserving relative order.
    Graph without_edge(int u, int v) const;
    Graph without_vertices(const std::vector<int>& vs) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// ---- graph families ----------------------------------------------------

struct PathSpec final { int n; };      // P_n, n >= 1
struct CycleSpec final { int n; };     // C_n, n >= 3
struct TadpoleSpec final {             // cycle C_l with a pendant path, n >= l >= 3
    int n;
    int cycle_len;
};
struct P66Spec final { int n; };       // two hexagons joined through a path, n >= 12
struct RSpec final { int a, b; };      // cycles C_a, C_b joined by one edge; a, b >= 3

using FamilySpec = std::variant<PathSpec, CycleSpec, TadpoleSpec, P66Spec, RSpec>;

// Throws ParameterError naming the violated bound.
void validate(const FamilySpec& spec);

// Deterministic vertex layout per family:
//   Path:    0-1-...-(n-1)
//   Cycle:   ring 0..n-1
//   Tadpole: ring 0..l-1, tail l..n-1 attached at vertex 0
//   P66:     hexagon 0..5, hexagon 6..11, joining path 12..n-1 from vertex 0
//            to vertex 6 (n = 12: the single edge {0,6})
//   R:       ring 0..a-1, ring a..a+b-1, bridge {0, a}
Graph build(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);

// ---- structural predicates ----------------------------------------------

bool is_connected(const Graph& g);

// True iff g has no odd cycle; optionally writes a proper 2-coloring (0/1).
bool is_bipartite(const Graph& g, std::vector<int>* coloring = nullptr);

// Connected with |E| = |V| + 1.
bool is_bicyclic(const Graph& g);

// ---- isomorphism ----------------------------------------------------------

// Exact canonical edge list: equal across graphs iff they are isomorphic.
// Iterative refinement with backtracking over every vertex of the first
// unresolved cell; supports up to 64 vertices.
std::vector<Edge> canonical_form(const Graph& g);

// Compact single-string key of canonical_form, usable as a set/map key.
std::string canonical_key(const Graph& g);

// ---- enumeration ----------------------------------------------------------

// All free trees on n vertices, one representative per isomorphism class.
std::vector<Graph> enumerate_trees(int n);

// One representative per isomorphism class of connected bipartite graphs with
// n vertices and n+1 edges, sorted by canonical key. shuffle_seed != 0
// randomizes internal generation order (the result is identical either way).
std::vector<Graph> enumerate_bipartite_bicyclic(int n, int cap = 14,
                                                std::uint64_t shuffle_seed = 0);

// ---- serialization --------------------------------------------------------

// "n m" header line, then one "u v" line per edge.
std::string to_edge_list_text(const Graph& g);
Graph parse_edge_list(const std::string& text);

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace genergy
