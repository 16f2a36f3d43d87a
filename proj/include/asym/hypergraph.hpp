#ifndef ASYM_HYPERGRAPH_HPP
#define ASYM_HYPERGRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asym/errors.hpp"

namespace asym {

// A bijection on vertex indices 0..n-1; image[v] is where v goes.
struct Permutation {
    std::vector<int> image;

    static Permutation identity(int n);
    // Validates that image is a bijection on 0..n-1, throws LengthMismatch otherwise.
    static Permutation from_image(std::vector<int> image);

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image[v]; }
    bool is_identity() const;
    Permutation inverse() const;

    bool operator==(const Permutation& other) const { return image == other.image; }
    bool operator<(const Permutation& other) const { return image < other.image; }
};

// (p * q)(v) = p(q(v)): q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);

// k-uniform hypergraph with labeled vertices. Vertex identity is the index;
// labels are metadata. Edges are sorted index lists kept in lexicographic
// order, with edge_names (when present) permuted alongside.
struct Hypergraph {
    int k = 0;
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<int>> edges;
    std::vector<std::string> edge_names; // empty or parallel to edges
    std::map<std::string, std::string> meta;

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge_names() const { return !edge_names.empty(); }

    // Index of the vertex with this label, if any.
    std::optional<int> vertex_index(const std::string& label) const;
    // Index of the edge with this name, if names are present.
    std::optional<int> edge_index_by_name(const std::string& name) const;
    // Index of the edge with exactly these members (sorted internally).
    std::optional<int> edge_index(std::vector<int> members) const;

    // Equality is over (k, labels, canonical edges); names and meta are provenance.
    bool operator==(const Hypergraph& other) const {
        return k == other.k && vertex_labels == other.vertex_labels && edges == other.edges;
    }
};

// Validates and canonicalizes. Throws NonUniformEdge, DuplicateEdge,
// DuplicateLabel, IndexOutOfRange, InvalidParams (k < 2 or name list length mismatch).
Hypergraph build(int k, std::vector<std::string> labels, std::vector<std::vector<int>> edges,
                 std::vector<std::string> edge_names = {});

int degree(const Hypergraph& h, int v);
int codegree(const Hypergraph& h, int u, int v);
int max_degree(const Hypergraph& h);
int max_codegree(const Hypergraph& h); // requires n >= 2
bool is_linear(const Hypergraph& h);   // max codegree <= 1

// Incident edge indices, ascending.
std::vector<int> adjacency_set(const Hypergraph& h, int v);

// Sub-hypergraph induced by the vertex subset (indices into h). Vertices are
// relabeled to 0..|subset|-1 in ascending original order, keeping labels and
// the names of surviving edges.
Hypergraph induced(const Hypergraph& h, const std::vector<int>& subset);

bool is_automorphism(const Hypergraph& h, const Permutation& p);

// First transposition (in ascending pair order) that is an automorphism,
// covering the two-isolated-vertices case. None if no such pair exists.
std::optional<Permutation> twin_swap_witness(const Hypergraph& h);

} // namespace asym

#endif // ASYM_HYPERGRAPH_HPP
