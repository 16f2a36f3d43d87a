#include "asym/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace asym {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonUniformEdge: return "NonUniformEdge";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SameVertex: return "SameVertex";
        case ErrorKind::TooFewVertices: return "TooFewVertices";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::RetryLimitExceeded: return "RetryLimitExceeded";
        case ErrorKind::NotRegular: return "NotRegular";
        case ErrorKind::DegreeTooLow: return "DegreeTooLow";
        case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
        case ErrorKind::StructureViolation: return "StructureViolation";
        case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorKind::AsymmetricSubgraphFound: return "AsymmetricSubgraphFound";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
    }
    return "UnknownError";
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

Permutation Permutation::from_image(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    std::vector<bool> seen(n, false);
    for (int v : image) {
        if (v < 0 || v >= n || seen[v])
            throw Error(ErrorKind::LengthMismatch, "image is not a bijection on 0.." + std::to_string(n - 1));
        seen[v] = true;
    }
    Permutation p;
    p.image = std::move(image);
    return p;
}

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (image[v] != v) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.image.resize(image.size());
    for (int v = 0; v < size(); ++v) inv.image[image[v]] = v;
    return inv;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw Error(ErrorKind::LengthMismatch, "composing permutations of different sizes");
    Permutation r;
    r.image.resize(p.size());
    for (int v = 0; v < p.size(); ++v) r.image[v] = p.image[q.image[v]];
    return r;
}

std::optional<int> Hypergraph::vertex_index(const std::string& label) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertex_labels[v] == label) return v;
    return std::nullopt;
}

std::optional<int> Hypergraph::edge_index_by_name(const std::string& name) const {
    for (int e = 0; e < static_cast<int>(edge_names.size()); ++e)
        if (edge_names[e] == name) return e;
    return std::nullopt;
}

std::optional<int> Hypergraph::edge_index(std::vector<int> members) const {
    std::sort(members.begin(), members.end());
    auto it = std::lower_bound(edges.begin(), edges.end(), members);
    if (it != edges.end() && *it == members)
        return static_cast<int>(it - edges.begin());
    return std::nullopt;
}

Hypergraph build(int k, std::vector<std::string> labels, std::vector<std::vector<int>> edges,
                 std::vector<std::string> edge_names) {
    if (k < 2) throw Error(ErrorKind::InvalidParams, "edge size k must be at least 2");
    if (!edge_names.empty() && edge_names.size() != edges.size())
        throw Error(ErrorKind::InvalidParams, "edge_names length does not match edges");

    const int n = static_cast<int>(labels.size());
    {
        std::set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second)
                throw Error(ErrorKind::DuplicateLabel, "vertex label \"" + l + "\" repeated");
    }

    for (auto& e : edges) {
        for (int v : e)
            if (v < 0 || v >= n)
                throw Error(ErrorKind::IndexOutOfRange, "edge member " + std::to_string(v) + " out of range");
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != k || std::adjacent_find(e.begin(), e.end()) != e.end())
            throw Error(ErrorKind::NonUniformEdge, "edge is not a set of exactly " + std::to_string(k) + " vertices");
    }

    // Canonical order: lexicographic on sorted member lists, names alongside.
    std::vector<int> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return edges[a] < edges[b]; });

    Hypergraph h;
    h.k = k;
    h.vertex_labels = std::move(labels);
    h.edges.reserve(edges.size());
    if (!edge_names.empty()) h.edge_names.reserve(edges.size());
    for (size_t i = 0; i < order.size(); ++i) {
        if (!h.edges.empty() && h.edges.back() == edges[order[i]])
            throw Error(ErrorKind::DuplicateEdge, "edge set repeated");
        h.edges.push_back(std::move(edges[order[i]]));
        if (!edge_names.empty()) h.edge_names.push_back(std::move(edge_names[order[i]]));
    }
    return h;
}

static void check_vertex(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.vertex_count())
        throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
}

int degree(const Hypergraph& h, int v) {
    check_vertex(h, v);
    int d = 0;
    for (const auto& e : h.edges)
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

int codegree(const Hypergraph& h, int u, int v) {
    check_vertex(h, u);
    check_vertex(h, v);
    if (u == v) throw Error(ErrorKind::SameVertex, "codegree needs two distinct vertices");
    int d = 0;
    for (const auto& e : h.edges)
        if (std::binary_search(e.begin(), e.end(), u) && std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

int max_degree(const Hypergraph& h) {
    std::vector<int> deg(h.vertex_count(), 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[v];
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int max_codegree(const Hypergraph& h) {
    if (h.vertex_count() < 2)
        throw Error(ErrorKind::TooFewVertices, "max codegree needs at least two vertices");
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& e : h.edges)
        for (size_t a = 0; a < e.size(); ++a)
            for (size_t b = a + 1; b < e.size(); ++b)
                ++pair_count[{e[a], e[b]}];
    int best = 0;
    for (const auto& [pair, cnt] : pair_count) best = std::max(best, cnt);
    return best;
}

bool is_linear(const Hypergraph& h) { return max_codegree(h) <= 1; }

std::vector<int> adjacency_set(const Hypergraph& h, int v) {
    check_vertex(h, v);
    std::vector<int> out;
    for (int e = 0; e < h.edge_count(); ++e)
        if (std::binary_search(h.edges[e].begin(), h.edges[e].end(), v)) out.push_back(e);
    return out;
}

Hypergraph induced(const Hypergraph& h, const std::vector<int>& subset) {
    std::vector<int> verts = subset;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) check_vertex(h, v);

    std::vector<int> new_index(h.vertex_count(), -1);
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        new_index[verts[i]] = static_cast<int>(i);
        labels.push_back(h.vertex_labels[verts[i]]);
    }

    std::vector<std::vector<int>> edges;
    std::vector<std::string> names;
    for (int e = 0; e < h.edge_count(); ++e) {
        bool inside = true;
        for (int v : h.edges[e])
            if (new_index[v] < 0) { inside = false; break; }
        if (!inside) continue;
        std::vector<int> mapped;
        mapped.reserve(h.edges[e].size());
        for (int v : h.edges[e]) mapped.push_back(new_index[v]);
        edges.push_back(std::move(mapped));
        if (h.has_edge_names()) names.push_back(h.edge_names[e]);
    }
    return build(h.k, std::move(labels), std::move(edges), std::move(names));
}

bool is_automorphism(const Hypergraph& h, const Permutation& p) {
    if (p.size() != h.vertex_count())
        throw Error(ErrorKind::LengthMismatch, "permutation size does not match vertex count");
    std::vector<int> mapped;
    for (const auto& e : h.edges) {
        mapped.clear();
        for (int v : e) mapped.push_back(p.image[v]);
        std::sort(mapped.begin(), mapped.end());
        if (!std::binary_search(h.edges.begin(), h.edges.end(), mapped)) return false;
    }
    return true;
}

std::optional<Permutation> twin_swap_witness(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n < 2) return std::nullopt;

    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edges[e]) inc[v].push_back(e);

    std::vector<int> mapped;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (inc[u].size() != inc[v].size()) continue;
            // Only edges touching u or v move under the transposition.
            std::vector<int> affected;
            std::set_union(inc[u].begin(), inc[u].end(), inc[v].begin(), inc[v].end(),
                           std::back_inserter(affected));
            bool ok = true;
            for (int e : affected) {
                mapped.clear();
                for (int x : h.edges[e]) mapped.push_back(x == u ? v : (x == v ? u : x));
                std::sort(mapped.begin(), mapped.end());
                if (!std::binary_search(h.edges.begin(), h.edges.end(), mapped)) { ok = false; break; }
            }
            if (ok) {
                Permutation p = Permutation::identity(n);
                p.image[u] = v;
                p.image[v] = u;
                return p;
            }
        }
    }
    return std::nullopt;
}

} // namespace asym
