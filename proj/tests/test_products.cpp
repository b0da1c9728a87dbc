#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wcprod/errors.hpp"
#include "wcprod/families.hpp"
#include "wcprod/independence.hpp"
#include "wcprod/products.hpp"

using namespace wcprod;

namespace {
VertexSet set(std::vector<Vertex> v) { return VertexSet::of(v); }
}  // namespace

TEST_CASE("named products") {
    const ProductGraph k2k2(complete_graph(2), complete_graph(2));
    CHECK(k2k2.graph().order() == 4);
    CHECK(k2k2.graph().edge_count() == 2);
    CHECK(k2k2.graph().regular_degree() == 1);

    const ProductGraph k3k3(complete_graph(3), complete_graph(3));
    CHECK(k3k3.graph().order() == 9);
    CHECK(k3k3.graph().regular_degree() == 4);

    const ProductGraph k2p3(complete_graph(2), path_graph(3));
    CHECK(k2p3.graph().order() == 6);
    for (auto [u, v] : k2p3.graph().edges()) {
        CHECK(k2p3.coordinates(u).first != k2p3.coordinates(v).first);
        CHECK((k2p3.coordinates(u).second + k2p3.coordinates(v).second) % 2 == 1);
    }
    CHECK(k2p3.graph().is_bipartite());
}

TEST_CASE("layers and projections") {
    const ProductGraph k3k3(complete_graph(3), complete_graph(3));
    CHECK(k3k3.layer_h(0) == set({0, 1, 2}));
    CHECK(k3k3.graph().is_independent(k3k3.layer_h(0)));
    CHECK(k3k3.project_g(set({k3k3.index(0, 1), k3k3.index(2, 1)})) == set({0, 2}));
    CHECK(k3k3.project_h(set({k3k3.index(0, 1), k3k3.index(2, 1)})) == set({1}));

    const ProductGraph k2k2(complete_graph(2), complete_graph(2));
    CHECK(k2k2.layer_g(1) == set({k2k2.index(0, 1), k2k2.index(1, 1)}));
}

TEST_CASE("product structure on random factors") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(rng, 1, 7);
        const Graph h = oracle::random_graph(rng, 1, 7);
        const ProductGraph p(g, h);
        CHECK(p.graph() == oracle::product(g, h));
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = 0; b < h.order(); ++b) {
                const Vertex v = p.index(a, b);
                CHECK(p.coordinates(v) == std::pair<Vertex, Vertex>{a, b});
                CHECK(p.graph().degree(v) == g.degree(a) * h.degree(b));
            }
        for (Vertex a = 0; a < g.order(); ++a) CHECK(p.graph().is_independent(p.layer_h(a)));
        for (Vertex b = 0; b < h.order(); ++b) CHECK(p.graph().is_independent(p.layer_g(b)));

        // Swapping factors is the index bijection (g,h) -> (h,g).
        const ProductGraph q(h, g);
        for (auto [u, v] : p.graph().edges()) {
            auto [gu, hu] = p.coordinates(u);
            auto [gv, hv] = p.coordinates(v);
            CHECK(q.graph().has_edge(q.index(hu, gu), q.index(hv, gv)));
        }
        CHECK(p.graph().edge_count() == q.graph().edge_count());
    }
}

TEST_CASE("product distributes over disjoint unions") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g1 = oracle::random_graph(rng, 1, 4);
        const Graph g2 = oracle::random_graph(rng, 1, 4);
        const Graph h = oracle::random_graph(rng, 1, 5);
        const Graph whole = direct_product(disjoint_union(g1, g2), h).graph();
        const Graph parts =
            disjoint_union(direct_product(g1, h).graph(), direct_product(g2, h).graph());
        CHECK(whole == parts);
    }
}

TEST_CASE("capacity limit") {
    CHECK_NOTHROW(ProductGraph(complete_graph(8), complete_graph(8)));
    CHECK_THROWS_AS(ProductGraph(complete_graph(8), complete_graph(9)), CapacityError);
    CHECK_THROWS_AS(direct_product(cycle_graph(13), cycle_graph(5)), CapacityError);
}

TEST_CASE("lift_independent") {
    const ProductGraph c4k2(cycle_graph(4), complete_graph(2));
    const VertexSet lifted = lift_independent(c4k2, set({0, 2}));
    CHECK(lifted.size() == 4);
    CHECK(c4k2.graph().is_maximal_independent(lifted));

    const ProductGraph k3k3(complete_graph(3), complete_graph(3));
    const VertexSet layer = lift_independent(k3k3, set({0}));
    CHECK(layer == k3k3.layer_h(0));
    CHECK(k3k3.graph().is_maximal_independent(layer));

    const ProductGraph k2k2(complete_graph(2), complete_graph(2));
    CHECK(lift_independent(k2k2, set({0})) == set({k2k2.index(0, 0), k2k2.index(0, 1)}));
    CHECK(k2k2.graph().is_maximal_independent(lift_independent(k2k2, set({0}))));

    CHECK_THROWS_AS(lift_independent(k3k3, set({0, 1})), GraphError);
}

TEST_CASE("maximal sets lift to maximal sets when H has no isolated vertex") {
    std::mt19937_64 rng(33);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(rng, 1, 6);
        const Graph h = oracle::random_graph(rng, 2, 6);
        if (!h.isolated_vertices().empty()) continue;
        const ProductGraph p(g, h);
        for (VertexSet i : maximal_independent_sets(g)) {
            CHECK(p.graph().is_maximal_independent(lift_independent(p, i)));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("product bounds") {
    const auto k3 = product_bounds_check(complete_graph(3), complete_graph(3));
    CHECK(k3.holds());
    CHECK(k3.witness["alpha_product"] == 3);
    CHECK(k3.witness["alpha_lower_bound"] == 3);

    const auto c4 = product_bounds_check(cycle_graph(4), complete_graph(2));
    CHECK(c4.holds());
    CHECK(c4.witness["alpha_product"] == 4);
    CHECK(c4.witness["alpha_lower_bound"] == 4);

    const auto c5 = product_bounds_check(cycle_graph(5), cycle_graph(5));
    CHECK(c5.holds());
    CHECK(c5.witness["alpha_product"].get<int>() >= 10);
    int largest = 0;
    for_each_maximal_independent_set(direct_product(cycle_graph(5), cycle_graph(5)).graph(), [&](VertexSet s) {
        largest = std::max(largest, s.size());
        return true;
    });
    CHECK(c5.witness["alpha_product"] == largest);

    CHECK(product_bounds_check(path_graph(3), disjoint_union(complete_graph(2), complete_graph(1))).vacuous());
}
