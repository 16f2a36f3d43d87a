#include <doctest.h>

#include <random>

#include "asym/constructions.hpp"
#include "asym/hypergraph.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace asym;
using testutil::at;
using testutil::thrown_kind;

TEST_CASE("build validates and canonicalizes") {
    Hypergraph h = build(3, {"a", "b", "c"}, {{2, 1, 0}});
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.edges[0] == std::vector<int>{0, 1, 2});

    CHECK(thrown_kind([] { build(3, {"a", "b", "c"}, {{0, 1, 2}, {2, 1, 0}}); }) == ErrorKind::DuplicateEdge);
    CHECK(thrown_kind([] { build(3, {"a", "b", "c"}, {{0, 1, 1}}); }) == ErrorKind::NonUniformEdge);
    CHECK(thrown_kind([] { build(3, {"a", "b", "c"}, {{0, 1}}); }) == ErrorKind::NonUniformEdge);
    CHECK(thrown_kind([] { build(3, {"a", "a", "c"}, {}); }) == ErrorKind::DuplicateLabel);
    CHECK(thrown_kind([] { build(3, {"a", "b", "c"}, {{0, 1, 3}}); }) == ErrorKind::IndexOutOfRange);
    CHECK(thrown_kind([] { build(1, {"a"}, {}); }) == ErrorKind::InvalidParams);

    // edges sorted lexicographically, names carried along
    Hypergraph g = build(2, {"a", "b", "c"}, {{2, 1}, {0, 1}}, {"second", "first"});
    CHECK(g.edges == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    CHECK(g.edge_names == std::vector<std::string>{"first", "second"});
}

TEST_CASE("degree and codegree on G_{3,2}") {
    Hypergraph g = gen_G(3, 2);
    CHECK(degree(g, at(g, "u_1")) == 1);
    CHECK(degree(g, at(g, "v_1")) == 2);
    CHECK(codegree(g, at(g, "v_1"), at(g, "v_2")) == 1);
    CHECK(codegree(g, at(g, "u_1"), at(g, "u_2")) == 0);
    CHECK(thrown_kind([&] { codegree(g, 0, 0); }) == ErrorKind::SameVertex);
    CHECK(thrown_kind([&] { degree(g, 99); }) == ErrorKind::IndexOutOfRange);

    Hypergraph lonely = build(3, {"a", "b", "c", "d"}, {{0, 1, 2}});
    CHECK(degree(lonely, 3) == 0);
}

TEST_CASE("maxima and linearity") {
    Hypergraph h = gen_H(4, {2, 3, 4});
    CHECK(max_degree(h) == 2);
    CHECK(is_linear(h));

    Hypergraph h3 = gen_H3(2, 3);
    CHECK(max_degree(h3) == 2);
    CHECK(is_linear(h3));

    Hypergraph single = build(3, {"a", "b", "c"}, {{0, 1, 2}});
    CHECK(max_codegree(single) == 1);

    Hypergraph tiny = build(2, {"a"}, {});
    CHECK(thrown_kind([&] { max_codegree(tiny); }) == ErrorKind::TooFewVertices);
}

TEST_CASE("sum of degrees is k times the edge count") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        const int k = 2 + static_cast<int>(rng() % 3);
        Hypergraph h = oracles::random_hypergraph(rng, n, k, 6);
        long long sum = 0;
        for (int v = 0; v < h.vertex_count(); ++v) sum += degree(h, v);
        CHECK(sum == static_cast<long long>(h.k) * h.edge_count());
    }
}

TEST_CASE("linearity agrees with pairwise edge intersections") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 5);
        Hypergraph h = oracles::random_hypergraph(rng, n, 3, 7);
        bool pairwise = true;
        for (size_t a = 0; a < h.edges.size(); ++a) {
            for (size_t b = a + 1; b < h.edges.size(); ++b) {
                std::vector<int> common;
                std::set_intersection(h.edges[a].begin(), h.edges[a].end(), h.edges[b].begin(),
                                      h.edges[b].end(), std::back_inserter(common));
                if (common.size() > 1) pairwise = false;
            }
        }
        CHECK(is_linear(h) == pairwise);
    }
}

TEST_CASE("induced sub-hypergraphs") {
    Hypergraph g = gen_G(3, 2);

    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    CHECK(induced(g, all) == g);

    Hypergraph one = induced(g, {at(g, "v_1"), at(g, "u_1"), at(g, "v_2")});
    CHECK(one.edge_count() == 1);
    CHECK(one.vertex_count() == 3);
    CHECK(one.edge_names == std::vector<std::string>{"E_1"});

    Hypergraph empty = induced(g, {});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    CHECK(thrown_kind([&] { induced(g, {0, 99}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("induced is monotone and never adds edges") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph h = oracles::random_hypergraph(rng, 8, 3, 8);
        std::vector<int> w2;
        for (int v = 0; v < 8; ++v)
            if (rng() % 2) w2.push_back(v);
        std::vector<int> w1;
        for (int v : w2)
            if (rng() % 2) w1.push_back(v);

        Hypergraph h1 = induced(h, w1);
        Hypergraph h2 = induced(h, w2);
        CHECK(h1.edge_count() <= h2.edge_count());
        CHECK(h2.edge_count() <= h.edge_count());

        // every edge of the smaller appears in the larger, mapped through labels
        for (const auto& e : h1.edges) {
            std::vector<int> mapped;
            for (int v : e) mapped.push_back(at(h2, h1.vertex_labels[v]));
            std::sort(mapped.begin(), mapped.end());
            CHECK(h2.edge_index(mapped).has_value());
        }
    }
}

TEST_CASE("is_automorphism") {
    Hypergraph g = gen_G(3, 2);
    CHECK(is_automorphism(g, Permutation::identity(g.vertex_count())));

    Permutation swap_uv = Permutation::identity(g.vertex_count());
    std::swap(swap_uv.image[at(g, "u_1")], swap_uv.image[at(g, "v_1")]);
    CHECK_FALSE(is_automorphism(g, swap_uv));

    CHECK(thrown_kind([&] { is_automorphism(g, Permutation::identity(3)); }) == ErrorKind::LengthMismatch);
    CHECK(thrown_kind([] { Permutation::from_image({0, 0, 1}); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("rotation by k is an automorphism of G_{4,2}") {
    Hypergraph g = gen_G(4, 2);
    const int tk = 8;
    Permutation rot = Permutation::identity(g.vertex_count());
    for (int i = 1; i <= tk; ++i) {
        const int target = (i + 4 - 1) % tk + 1;
        rot.image[at(g, "u_" + std::to_string(i))] = at(g, "u_" + std::to_string(target));
        rot.image[at(g, "v_" + std::to_string(i))] = at(g, "v_" + std::to_string(target));
        rot.image[at(g, "w_" + std::to_string(i) + "_1")] = at(g, "w_" + std::to_string(target) + "_1");
    }
    CHECK(is_automorphism(g, rot));
    CHECK_FALSE(rot.is_identity());
}

TEST_CASE("automorphisms close under composition and inverse") {
    Hypergraph g = gen_G(3, 2);
    const int tk = 6;
    auto rotation = [&](int shift) {
        Permutation p = Permutation::identity(g.vertex_count());
        for (int i = 1; i <= tk; ++i) {
            const int target = (i + shift - 1) % tk + 1;
            p.image[at(g, "u_" + std::to_string(i))] = at(g, "u_" + std::to_string(target));
            p.image[at(g, "v_" + std::to_string(i))] = at(g, "v_" + std::to_string(target));
        }
        return p;
    };
    Permutation r1 = rotation(1), r2 = rotation(2);
    REQUIRE(is_automorphism(g, r1));
    REQUIRE(is_automorphism(g, r2));
    CHECK(is_automorphism(g, compose(r1, r2)));
    CHECK(is_automorphism(g, r1.inverse()));
    CHECK(compose(r1, r1.inverse()).is_identity());
}

TEST_CASE("twin swap witness") {
    // two isolated vertices
    Hypergraph iso = build(3, {"a", "b", "c", "d", "e"}, {{0, 1, 2}});
    auto w = twin_swap_witness(iso);
    REQUIRE(w.has_value());
    CHECK(is_automorphism(iso, *w));
    CHECK_FALSE(w->is_identity());

    // the full construction has no twins
    Hypergraph h = gen_H(4, {2, 3, 4});
    CHECK_FALSE(twin_swap_witness(h).has_value());

    // deleting u1_1 pairs two degree-1 vertices inside one edge
    std::vector<int> rest;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (v != at(h, "u1_1")) rest.push_back(v);
    Hypergraph sub = induced(h, rest);
    auto tw = twin_swap_witness(sub);
    REQUIRE(tw.has_value());
    CHECK(is_automorphism(sub, *tw));
    CHECK_FALSE(tw->is_identity());

    // deleting v1_1 makes x0 and u1_1 swappable within E_0
    rest.clear();
    for (int v = 0; v < h.vertex_count(); ++v)
        if (v != at(h, "v1_1")) rest.push_back(v);
    Hypergraph sub2 = induced(h, rest);
    auto tw2 = twin_swap_witness(sub2);
    REQUIRE(tw2.has_value());
    CHECK(is_automorphism(sub2, *tw2));
}
