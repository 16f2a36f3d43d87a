#include "asym/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "asym/labels.hpp"

namespace asym {

namespace {

// 1-based cyclic normalization into [m].
int norm(int x, int m) { return ((x - 1) % m + m) % m + 1; }

std::string role_label(VertexRole::Tag tag, int i, int j, int copy, bool prime) {
    VertexRole r;
    r.tag = tag;
    r.i = i;
    r.j = j;
    r.copy = copy;
    r.prime = prime;
    return r.to_label();
}

struct GPart {
    int offset = 0;
    int tk = 0;

    int u(int i) const { return offset + (i - 1); }
    int v(int i) const { return offset + tk + (i - 1); }
    int w(int i, int j) const { return offset + 2 * tk + (j - 1) * tk + (i - 1); }
};

std::string decorate_edge_name(const std::string& base, int copy, bool prime) {
    // "E_3" -> "E2_3" / "E'_3"
    std::string out = "E";
    if (prime) out += '\'';
    else if (copy > 0) out += std::to_string(copy);
    out += base.substr(1);
    return out;
}

// Appends one copy of the G_{k,t} construction, decorating labels and edge
// names with the copy number or prime marker.
GPart append_G(int k, int t, int copy, bool prime, std::vector<std::string>& labels,
               std::vector<std::vector<int>>& edges, std::vector<std::string>& names) {
    GPart part;
    part.offset = static_cast<int>(labels.size());
    part.tk = t * k;
    const int tk = part.tk;

    for (int i = 1; i <= tk; ++i)
        labels.push_back(role_label(VertexRole::Tag::u, i, 0, copy, prime));
    for (int i = 1; i <= tk; ++i)
        labels.push_back(role_label(VertexRole::Tag::v, i, 0, copy, prime));
    for (int j = 1; j <= k - 3; ++j)
        for (int i = 1; i <= tk; ++i)
            labels.push_back(role_label(VertexRole::Tag::w, i, j, copy, prime));

    for (int i = 1; i <= tk; ++i) {
        std::vector<int> e = {part.v(i), part.u(i), part.v(norm(i + 1, tk))};
        for (int j = 1; j <= k - 3; ++j) e.push_back(part.w(i, j));
        edges.push_back(std::move(e));
        names.push_back(decorate_edge_name("E_" + std::to_string(i), copy, prime));
    }
    for (int j = 1; j <= k - 3; ++j) {
        for (int s = 1; s <= t; ++s) {
            const int i0 = norm(j + s * k, tk);
            std::vector<int> e;
            e.reserve(k);
            for (int d = 0; d < k; ++d) e.push_back(part.w(norm(i0 + d, tk), j));
            edges.push_back(std::move(e));
            names.push_back(decorate_edge_name(
                "E_{" + std::to_string(i0) + "," + std::to_string(j) + "}", copy, prime));
        }
    }
    return part;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

} // namespace

Hypergraph gen_G(int k, int t) {
    if (k < 3 || t < 2)
        throw Error(ErrorKind::InvalidParams, "gen_G requires k >= 3 and t >= 2");
    std::vector<std::string> labels;
    std::vector<std::vector<int>> edges;
    std::vector<std::string> names;
    append_G(k, t, 0, false, labels, edges, names);
    Hypergraph h = build(k, std::move(labels), std::move(edges), std::move(names));
    h.meta["family"] = "G";
    h.meta["k"] = std::to_string(k);
    h.meta["t"] = std::to_string(t);
    return h;
}

Hypergraph gen_H(int k, const std::vector<int>& ts) {
    if (k < 3) throw Error(ErrorKind::InvalidParams, "gen_H requires k >= 3");
    if (static_cast<int>(ts.size()) != k - 1)
        throw Error(ErrorKind::InvalidParams, "gen_H requires exactly k-1 parameters t_1..t_{k-1}");
    for (size_t l = 0; l < ts.size(); ++l) {
        if (ts[l] < 2)
            throw Error(ErrorKind::InvalidParams, "gen_H requires t_1 >= 2");
        if (l > 0 && ts[l] <= ts[l - 1])
            throw Error(ErrorKind::InvalidParams, "gen_H requires strictly increasing t_1 < ... < t_{k-1}");
    }

    std::vector<std::string> labels;
    std::vector<std::vector<int>> edges;
    std::vector<std::string> names;
    std::vector<GPart> parts;
    for (int l = 1; l <= k - 1; ++l)
        parts.push_back(append_G(k, ts[l - 1], l, false, labels, edges, names));

    const int x0 = static_cast<int>(labels.size());
    labels.push_back("x0");
    std::vector<int> e0 = {x0};
    for (const auto& part : parts) e0.push_back(part.u(1));
    edges.push_back(std::move(e0));
    names.push_back("E_0");

    Hypergraph h = build(k, std::move(labels), std::move(edges), std::move(names));
    h.meta["family"] = "H";
    h.meta["k"] = std::to_string(k);
    std::string ts_str;
    for (size_t l = 0; l < ts.size(); ++l)
        ts_str += (l ? "," : "") + std::to_string(ts[l]);
    h.meta["ts"] = ts_str;
    if (k == 3 || k == 5)
        h.meta["warning"] = "non-asymmetric for k=" + std::to_string(k);
    return h;
}

Hypergraph gen_H3(int t, int t_prime) {
    if (t < 2 || t_prime <= t)
        throw Error(ErrorKind::InvalidParams, "gen_H3 requires 2 <= t < t'");

    std::vector<std::string> labels;
    std::vector<std::vector<int>> edges;
    std::vector<std::string> names;
    GPart g = append_G(3, t, 0, false, labels, edges, names);
    GPart gp = append_G(3, t_prime, 0, true, labels, edges, names);

    const int x0 = static_cast<int>(labels.size());
    const int y = x0 + 1;
    const int y_prime = x0 + 2;
    labels.push_back("x0");
    labels.push_back("y");
    labels.push_back("y'");
    edges.push_back({x0, g.u(1), gp.u(1)});
    names.push_back("E_0");
    edges.push_back({y, g.u(2), g.u(3)});
    names.push_back("E_y");
    edges.push_back({y_prime, gp.u(2), gp.u(3)});
    names.push_back("E'_y");

    Hypergraph h = build(3, std::move(labels), std::move(edges), std::move(names));
    h.meta["family"] = "H3";
    h.meta["t"] = std::to_string(t);
    h.meta["t_prime"] = std::to_string(t_prime);
    return h;
}

Hypergraph gen_H5(int t, int t_prime) {
    if (t < 2 || t_prime <= t)
        throw Error(ErrorKind::InvalidParams, "gen_H5 requires 2 <= t < t'");

    std::vector<std::string> labels;
    std::vector<std::vector<int>> edges;
    std::vector<std::string> names;
    GPart g = append_G(5, t, 0, false, labels, edges, names);
    GPart gp = append_G(5, t_prime, 0, true, labels, edges, names);

    const int x0 = static_cast<int>(labels.size());
    labels.push_back("x0");
    edges.push_back({x0, g.u(1), g.u(2), gp.u(1), gp.u(2)});
    names.push_back("E_0");

    Hypergraph h = build(5, std::move(labels), std::move(edges), std::move(names));
    h.meta["family"] = "H5";
    h.meta["t"] = std::to_string(t);
    h.meta["t_prime"] = std::to_string(t_prime);
    return h;
}

Hypergraph frucht() {
    // LCF notation [-5,-2,-4,2,5,-2,2,5,-2,-5,4,2] on a 12-cycle.
    static const int lcf[12] = {-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};
    std::set<std::pair<int, int>> edge_set;
    auto add = [&edge_set](int a, int b) {
        edge_set.insert({std::min(a, b), std::max(a, b)});
    };
    for (int i = 0; i < 12; ++i) {
        add(i, (i + 1) % 12);
        add(i, ((i + lcf[i]) % 12 + 12) % 12);
    }

    std::vector<std::string> labels;
    for (int i = 1; i <= 12; ++i) labels.push_back(std::to_string(i));
    std::vector<std::vector<int>> edges;
    for (const auto& [a, b] : edge_set) edges.push_back({a, b});

    Hypergraph h = build(2, std::move(labels), std::move(edges));
    h.meta["family"] = "frucht";
    return h;
}

Hypergraph random_regular(int n, int r, std::uint64_t seed) {
    if (r < 3 || r >= n)
        throw Error(ErrorKind::InvalidParams, "random_regular requires 3 <= r < n");
    if ((static_cast<long long>(n) * r) % 2 != 0)
        throw Error(ErrorKind::InvalidParams, "random_regular requires n*r even");

    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<size_t>(n) * r);
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < r; ++c) stubs[static_cast<size_t>(v) * r + c] = v;

    const int max_attempts = 1000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        // Fisher-Yates with an explicit draw so the sequence is pinned to the seed.
        for (size_t i = stubs.size() - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rand_below(rng, i + 1)]);

        std::set<std::pair<int, int>> edge_set;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b || !edge_set.insert({std::min(a, b), std::max(a, b)}).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        std::vector<std::string> labels;
        for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
        std::vector<std::vector<int>> edges;
        for (const auto& [a, b] : edge_set) edges.push_back({a, b});
        Hypergraph h = build(2, std::move(labels), std::move(edges));
        h.meta["family"] = "random_regular";
        h.meta["n"] = std::to_string(n);
        h.meta["r"] = std::to_string(r);
        h.meta["seed"] = std::to_string(seed);
        return h;
    }
    throw Error(ErrorKind::RetryLimitExceeded,
                "no simple pairing found in " + std::to_string(max_attempts) + " attempts");
}

Hypergraph dual(const Hypergraph& g) {
    if (g.k != 2)
        throw Error(ErrorKind::InvalidParams, "dual is defined for 2-graphs");
    if (g.vertex_count() == 0 || g.edge_count() == 0)
        throw Error(ErrorKind::DegreeTooLow, "dual requires a graph with edges");

    const int r = degree(g, 0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (degree(g, v) != r)
            throw Error(ErrorKind::NotRegular, "dual requires a regular graph");
    if (r < 2)
        throw Error(ErrorKind::DegreeTooLow, "dual requires degree at least 2");

    std::vector<std::string> labels;
    labels.reserve(g.edge_count());
    for (const auto& e : g.edges)
        labels.push_back("e_" + g.vertex_labels[e[0]] + "_" + g.vertex_labels[e[1]]);

    std::vector<std::vector<int>> edges;
    std::vector<std::string> names;
    for (int v = 0; v < g.vertex_count(); ++v) {
        edges.push_back(adjacency_set(g, v));
        names.push_back("A_" + g.vertex_labels[v]);
    }

    Hypergraph h = build(r, std::move(labels), std::move(edges), std::move(names));
    h.meta["family"] = "dual";
    auto source = g.meta.find("family");
    if (source != g.meta.end()) h.meta["source_family"] = source->second;
    return h;
}

} // namespace asym
