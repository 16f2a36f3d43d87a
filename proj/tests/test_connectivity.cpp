#include <doctest.h>

#include <random>
#include <set>

#include "asym/aut.hpp"
#include "asym/connectivity.hpp"
#include "asym/constructions.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace asym;
using testutil::at;
using testutil::rotation_on_G;
using testutil::thrown_kind;

namespace {

void check_path_family(const Hypergraph& h, int u, int v, const ConnectivityResult& result) {
    CHECK(static_cast<int>(result.paths.size()) == result.count);
    std::set<int> used_edges;
    for (const auto& path : result.paths) {
        REQUIRE(path.vertices.size() == path.edges.size() + 1);
        CHECK(path.vertices.front() == u);
        CHECK(path.vertices.back() == v);
        std::set<int> vs(path.vertices.begin(), path.vertices.end());
        CHECK(vs.size() == path.vertices.size()); // vertices pairwise distinct
        std::set<int> es(path.edges.begin(), path.edges.end());
        CHECK(es.size() == path.edges.size()); // edges pairwise distinct
        for (size_t i = 0; i < path.edges.size(); ++i) {
            const auto& edge = h.edges[path.edges[i]];
            CHECK(std::binary_search(edge.begin(), edge.end(), path.vertices[i]));
            CHECK(std::binary_search(edge.begin(), edge.end(), path.vertices[i + 1]));
        }
        for (int e : path.edges) CHECK(used_edges.insert(e).second); // disjoint across paths
    }
}

} // namespace

TEST_CASE("two disjoint paths between v_1 and v_2 in G_{3,2}") {
    Hypergraph g = gen_G(3, 2);
    const int u = at(g, "v_1"), v = at(g, "v_2");
    ConnectivityResult r = max_edge_disjoint_paths(g, u, v);
    CHECK(r.count == 2);
    check_path_family(g, u, v, r);
    CHECK(is_t_connected(g, u, v, 2));
}

TEST_CASE("the E_0 bridge pair in H(2,3,4) is only 1-connected") {
    Hypergraph h = gen_H(4, {2, 3, 4});
    const int u = at(h, "u1_1"), v = at(h, "u2_1");
    ConnectivityResult r = max_edge_disjoint_paths(h, u, v);
    CHECK(r.count == 1);
    check_path_family(h, u, v, r);
    CHECK_FALSE(is_t_connected(h, u, v, 2));
    CHECK(is_t_connected(h, u, v, 0));
}

TEST_CASE("isolated vertices are 0-connected") {
    Hypergraph h = build(3, {"a", "b", "c", "d", "e"}, {{0, 1, 2}});
    CHECK(max_edge_disjoint_paths(h, 3, 4).count == 0);
    CHECK(thrown_kind([&] { max_edge_disjoint_paths(h, 3, 3); }) == ErrorKind::SameVertex);
    CHECK(thrown_kind([&] { max_edge_disjoint_paths(h, 0, 9); }) == ErrorKind::IndexOutOfRange);
    CHECK(thrown_kind([&] { is_t_connected(h, 0, 1, -1); }) == ErrorKind::InvalidParams);
}

TEST_CASE("degree-2 vertices sharing an edge are 2-connected") {
    for (auto [k, t] : {std::pair{3, 2}, {4, 2}, {5, 2}}) {
        Hypergraph g = gen_G(k, t);
        for (const auto& edge : g.edges) {
            for (size_t a = 0; a < edge.size(); ++a) {
                for (size_t b = a + 1; b < edge.size(); ++b) {
                    if (degree(g, edge[a]) != 2 || degree(g, edge[b]) != 2) continue;
                    CHECK(max_edge_disjoint_paths(g, edge[a], edge[b]).count >= 2);
                }
            }
        }
    }
}

TEST_CASE("count never exceeds the endpoint degrees") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        Hypergraph h = oracles::random_hypergraph(rng, n, 3, 8);
        const int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (v == u) v = (v + 1) % n;
        ConnectivityResult r = max_edge_disjoint_paths(h, u, v);
        CHECK(r.count <= std::min(degree(h, u), degree(h, v)));
        check_path_family(h, u, v, r);
    }
}

TEST_CASE("flow matches the brute-force packing oracle") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const int m = 2 + static_cast<int>(rng() % 8);
        Hypergraph h = oracles::random_hypergraph(rng, n, 3, m);
        const int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (v == u) v = (v + 1) % n;
        CHECK(max_edge_disjoint_paths(h, u, v).count == oracles::brute_max_edge_disjoint_paths(h, u, v));
    }
}

TEST_CASE("automorphisms preserve connectivity") {
    Hypergraph g = gen_G(4, 2);
    Permutation rot = rotation_on_G(g, 8, 4);
    REQUIRE(is_automorphism(g, rot));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const int u = static_cast<int>(rng() % g.vertex_count());
        int v = static_cast<int>(rng() % g.vertex_count());
        if (v == u) v = (v + 1) % g.vertex_count();
        CHECK(max_edge_disjoint_paths(g, u, v).count ==
              max_edge_disjoint_paths(g, rot.image[u], rot.image[v]).count);
    }
}
