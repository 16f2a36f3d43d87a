// Brute-force reference implementations used by the tests. These stay
// independent of the library's search engine: they check edge preservation
// against their own set structures and enumerate candidates exhaustively.
#ifndef ASYM_TESTS_ORACLES_HPP
#define ASYM_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "asym/hypergraph.hpp"

namespace oracles {

inline std::set<std::vector<int>> edge_set_of(const asym::Hypergraph& h) {
    return {h.edges.begin(), h.edges.end()};
}

inline bool preserves_edges(const asym::Hypergraph& h, const std::vector<int>& image) {
    const auto edge_set = edge_set_of(h);
    for (const auto& e : h.edges) {
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(image[v]);
        std::sort(mapped.begin(), mapped.end());
        if (!edge_set.count(mapped)) return false;
    }
    return true;
}

// First non-identity automorphism in lexicographic permutation order; n! scan.
inline std::optional<std::vector<int>> brute_nontrivial_automorphism(const asym::Hypergraph& h) {
    std::vector<int> perm(h.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end()))
        if (preserves_edges(h, perm)) return perm;
    return std::nullopt;
}

inline long long brute_automorphism_count(const asym::Hypergraph& h) {
    std::vector<int> perm(h.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        if (preserves_edges(h, perm)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// For the k=3 cycle construction every automorphism acts dihedrally on the
// L-edge indices and extends uniquely to the vertices, so counting the
// dihedral actions that preserve the edge set gives the group order.
inline long long dihedral_extension_count(const asym::Hypergraph& g, int tk) {
    const int n = g.vertex_count();
    std::vector<int> u_at(tk + 1, -1), v_at(tk + 1, -1);
    for (int v = 0; v < n; ++v) {
        const auto& label = g.vertex_labels[v];
        if (label.rfind("u_", 0) == 0) u_at[std::stoi(label.substr(2))] = v;
        if (label.rfind("v_", 0) == 0) v_at[std::stoi(label.substr(2))] = v;
    }
    auto norm = [tk](int x) { return (x % tk + tk - 1) % tk + 1; };

    long long count = 0;
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int j = 1; j <= tk; ++j) {
            std::vector<int> image(n);
            for (int i = 1; i <= tk; ++i) {
                const int ui = reflect ? norm(j - i + 1) : norm(i + j - 1);
                const int vi = reflect ? norm(j - i + 2) : norm(i + j - 1);
                image[u_at[i]] = u_at[ui];
                image[v_at[i]] = v_at[vi];
            }
            if (preserves_edges(g, image)) ++count;
        }
    }
    return count;
}

// All simple Berge u-v paths as edge-index bitmasks (few edges only).
inline void collect_path_masks(const asym::Hypergraph& h, int cur, int target,
                               std::uint64_t vertex_mask, std::uint64_t edge_mask,
                               std::set<std::uint64_t>& out) {
    if (cur == target) {
        out.insert(edge_mask);
        return;
    }
    for (int e = 0; e < h.edge_count(); ++e) {
        if (edge_mask & (1ULL << e)) continue;
        const auto& edge = h.edges[e];
        if (!std::binary_search(edge.begin(), edge.end(), cur)) continue;
        for (int next : edge) {
            if (next == cur || (vertex_mask & (1ULL << next))) continue;
            collect_path_masks(h, next, target, vertex_mask | (1ULL << next),
                              edge_mask | (1ULL << e), out);
        }
    }
}

inline int max_disjoint_packing(const std::vector<std::uint64_t>& masks, size_t index,
                                std::uint64_t used,
                                std::map<std::pair<size_t, std::uint64_t>, int>& memo) {
    if (index == masks.size()) return 0;
    const auto key = std::make_pair(index, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = max_disjoint_packing(masks, index + 1, used, memo);
    if ((masks[index] & used) == 0)
        best = std::max(best, 1 + max_disjoint_packing(masks, index + 1, used | masks[index], memo));
    memo[key] = best;
    return best;
}

// Maximum edge-disjoint Berge path family by explicit enumeration.
inline int brute_max_edge_disjoint_paths(const asym::Hypergraph& h, int u, int v) {
    std::set<std::uint64_t> mask_set;
    collect_path_masks(h, u, v, 1ULL << u, 0, mask_set);
    std::vector<std::uint64_t> masks(mask_set.begin(), mask_set.end());
    std::map<std::pair<size_t, std::uint64_t>, int> memo;
    return max_disjoint_packing(masks, 0, 0, memo);
}

// Random k-uniform hypergraph with up to m distinct edges.
inline asym::Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int k, int m) {
    std::set<std::vector<int>> edge_set;
    std::vector<int> pool(n);
    for (int tries = 0; tries < 4 * m && static_cast<int>(edge_set.size()) < m; ++tries) {
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(rng() % (n - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> e(pool.begin(), pool.begin() + k);
        std::sort(e.begin(), e.end());
        edge_set.insert(std::move(e));
    }
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back("n" + std::to_string(v));
    return asym::build(k, std::move(labels),
                       std::vector<std::vector<int>>(edge_set.begin(), edge_set.end()));
}

} // namespace oracles

#endif // ASYM_TESTS_ORACLES_HPP
