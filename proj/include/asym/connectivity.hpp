#ifndef ASYM_CONNECTIVITY_HPP
#define ASYM_CONNECTIVITY_HPP

#include <vector>

#include "asym/hypergraph.hpp"

namespace asym {

// Alternating sequence v_1, E_1, v_2, ..., E_r, v_{r+1}: r+1 distinct
// vertices, r distinct edges, {v_i, v_{i+1}} within E_i.
struct BergePath {
    std::vector<int> vertices;
    std::vector<int> edges;
};

struct ConnectivityResult {
    int count = 0;
    std::vector<BergePath> paths; // pairwise edge-disjoint, count many
};

// Maximum number of pairwise edge-disjoint Berge u-v paths, with a witness
// family. Computed as max flow on the vertex/edge incidence network with unit
// capacity on edge nodes; extracted walks are shortcut to simple paths.
ConnectivityResult max_edge_disjoint_paths(const Hypergraph& h, int u, int v);

bool is_t_connected(const Hypergraph& h, int u, int v, int t);

} // namespace asym

#endif // ASYM_CONNECTIVITY_HPP
