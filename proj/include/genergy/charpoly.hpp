#pragma once

#include "genergy/graph.hpp"
#include "genergy/intpoly.hpp"

namespace genergy {

// det(xI - A(g)) via fraction-free integer elimination of kI - A at the
// integer points k = 0..n, followed by exact finite-difference interpolation.
IntPoly charpoly_direct(const Graph& g);

// Exact recursive family polynomials:
//   phi(P_n) = x phi(P_{n-1}) - phi(P_{n-2}),        phi(P_0) = 1, phi(P_1) = x
//   phi(C_n) = phi(P_n) - phi(P_{n-2}) - 2
//   tadpole: same three-term recursion from phi(C_l) and x phi(C_l) - phi(P_{l-1})
//   p66:     same recursion from the n = 12, 13 initial polynomials, which are
//            assembled from cycle/path products
//   R_{a,b}: phi(C_a) phi(C_b) - phi(P_{a-1}) phi(P_{b-1})
IntPoly phi_path_poly(int n);
IntPoly phi_cycle_poly(int n);
IntPoly phi_tadpole_poly(int n, int cycle_len);
IntPoly phi_p66_poly(int n);
IntPoly phi_r_poly(int a, int b);

IntPoly charpoly_by_recursion(const FamilySpec& spec);

// phi(G) = phi(G - uv) - phi(G - u - v) - 2 sum_{C in C(uv)} phi(G - C),
// expanded at edge e and evaluated recursively (with memoization on canonical
// forms). Cycles through uv are found by exhaustive path search.
IntPoly edge_deletion_recursion(const Graph& g, Edge e);

// Product of charpolys of the connected components.
IntPoly component_product(const Graph& g);

// Number of k-matchings, exact.
Int matching_count(const Graph& g, int k);

}  // namespace genergy
