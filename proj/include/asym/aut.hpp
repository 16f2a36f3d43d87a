#ifndef ASYM_AUT_HPP
#define ASYM_AUT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "asym/hypergraph.hpp"

namespace asym {

// Vertex partition with significant cell order; cells hold ascending indices.
struct OrderedPartition {
    std::vector<std::vector<int>> cells;

    static OrderedPartition unit(int n);
    static OrderedPartition discrete(int n);

    bool is_discrete() const;
    int vertex_count() const;
    // position of the cell containing each vertex
    std::vector<int> cell_of() const;
};

// Coarsest stable refinement of the initial partition. A vertex's signature is
// the multiset, over its incident edges, of (edge size, multiset of co-member
// cell positions); cells split into signature groups ordered by signature.
OrderedPartition refine(const Hypergraph& h, const OrderedPartition& initial);

struct AutReport {
    bool asymmetric = false;
    std::optional<Permutation> witness;
    std::vector<Permutation> generators;
    std::optional<long long> group_order; // present when enumeration completed under limit
    long long nodes_explored = 0;
};

// First non-identity automorphism in the deterministic search order, if one
// exists. Tries twin_swap_witness before the full search. Throws
// TooFewVertices for n < 2.
std::optional<Permutation> find_nontrivial_automorphism(const Hypergraph& h);

// find_nontrivial_automorphism wrapped in a report (group_order = 1 when
// asymmetric, absent otherwise).
AutReport analyze_symmetry(const Hypergraph& h);

// Enumerates the full automorphism group when it has at most `limit` elements;
// otherwise reports the generators found before hitting the limit with
// group_order absent.
AutReport automorphism_group(const Hypergraph& h, long long limit);

// Non-identity automorphism mapping edge e to itself setwise, if any. The
// search is seeded with the members of e split from the remaining vertices.
std::optional<Permutation> edge_stabilizer_nontrivial(const Hypergraph& h, int edge);

struct LEdgeAction {
    enum class Kind { rotation, reflection };
    Kind kind = Kind::rotation;
    int j = 0; // in 1..tk; rotation: E_i -> E_{i+j-1}, reflection: E_i -> E_{j-i+1}

    bool operator==(const LEdgeAction& other) const { return kind == other.kind && j == other.j; }
    bool operator<(const LEdgeAction& other) const {
        return kind != other.kind ? kind < other.kind : j < other.j;
    }
};

// For a hypergraph produced by gen_G, classifies how the automorphism p acts
// on the L-edges E_1..E_tk. Checks on the way that p preserves the u-set, the
// v-set and the L-edge set, and throws StructureViolation if it does not;
// throws NotAnAutomorphism if p is not an automorphism.
LEdgeAction classify_l_edge_action(const Hypergraph& g, const Permutation& p);

} // namespace asym

#endif // ASYM_AUT_HPP
