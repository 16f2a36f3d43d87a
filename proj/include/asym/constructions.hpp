#ifndef ASYM_CONSTRUCTIONS_HPP
#define ASYM_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "asym/hypergraph.hpp"

namespace asym {

// The cycle-of-L-edges k-graph G_{k,t}: vertices u_i, v_i (i in 1..tk) and
// w_{i,j} (j in 1..k-3), tk L-edges E_i = {v_i, u_i, v_{i+1}, w_{i,1..k-3}}
// and t cyclic edges E_{i,j} per w-layer. Requires k >= 3, t >= 2.
Hypergraph gen_G(int k, int t);

// Disjoint copies of gen_G(k, ts[l]) for l in 1..k-1 joined by the edge
// E_0 = {x0, u1_1, ..., u<k-1>_1}. Requires strictly increasing ts with
// ts[0] >= 2 and exactly k-1 entries. For k in {3, 5} the result carries a
// non-asymmetry warning in its metadata instead of being rejected.
Hypergraph gen_H(int k, const std::vector<int>& ts);

// Copies of gen_G(3,t) and gen_G(3,t') plus x0, y, y' and edges
// E_0 = {x0, u_1, u'_1}, E_y = {y, u_2, u_3}, E'_y = {y', u'_2, u'_3}.
// Requires 2 <= t < t'.
Hypergraph gen_H3(int t, int t_prime);

// Copies of gen_G(5,t) and gen_G(5,t') plus x0 and
// E_0 = {x0, u_1, u_2, u'_1, u'_2}. Requires 2 <= t < t'.
Hypergraph gen_H5(int t, int t_prime);

// The 12-vertex 3-regular asymmetric Frucht graph, as a 2-graph.
Hypergraph frucht();

// Simple r-regular graph on n vertices sampled by the pairing model with
// rejection of loops and parallel edges; deterministic for a fixed seed.
// Requires n*r even and 3 <= r < n.
Hypergraph random_regular(int n, int r, std::uint64_t seed);

// Hypergraph dual of an r-regular graph, r >= 2: one dual vertex per edge of
// g (labeled from its endpoints), one r-set A(v) per vertex of g. The result
// is r-uniform and 2-regular.
Hypergraph dual(const Hypergraph& g);

} // namespace asym

#endif // ASYM_CONSTRUCTIONS_HPP
