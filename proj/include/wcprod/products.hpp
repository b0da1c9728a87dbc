#pragma once

#include <utility>

#include "wcprod/graph.hpp"
#include "wcprod/verdict.hpp"

namespace wcprod {

/// The direct product G × H, materialised as an ordinary graph.
///
/// Vertex (g, h) has index g * n(H) + h. (g1,h1) ~ (g2,h2) iff g1g2 ∈ E(G)
/// and h1h2 ∈ E(H).
class ProductGraph {
public:
    ProductGraph(Graph g, Graph h);

    const Graph& graph() const noexcept { return product_; }
    const Graph& left() const noexcept { return left_; }
    const Graph& right() const noexcept { return right_; }
    int left_order() const noexcept { return left_.order(); }
    int right_order() const noexcept { return right_.order(); }

    Vertex index(Vertex g, Vertex h) const noexcept { return g * right_.order() + h; }
    std::pair<Vertex, Vertex> coordinates(Vertex v) const noexcept {
        return {v / right_.order(), v % right_.order()};
    }

    /// The H-layer over g: {(g, h) : h ∈ V(H)}.
    VertexSet layer_h(Vertex g) const noexcept;
    /// The G-layer over h: {(g, h) : g ∈ V(G)}.
    VertexSet layer_g(Vertex h) const noexcept;
    VertexSet project_g(VertexSet s) const noexcept;
    VertexSet project_h(VertexSet s) const noexcept;

    /// S × V(H) for S ⊆ V(G); no independence check.
    VertexSet lift(VertexSet s) const noexcept;

private:
    Graph left_;
    Graph right_;
    Graph product_;
};

/// Throws CapacityError when n(G) · n(H) exceeds 64.
ProductGraph direct_product(const Graph& g, const Graph& h);

/// I × V(H). Throws GraphError naming an edge of G inside I when I is not
/// independent.
VertexSet lift_independent(const ProductGraph& p, VertexSet i);

/// Compares α(G×H) against max{α(G)n(H), α(H)n(G)} and i(G×H) against
/// min{i(G)n(H), i(H)n(G)}. Vacuous when either factor has an isolated vertex.
ClaimVerdict product_bounds_check(const Graph& g, const Graph& h);

}  // namespace wcprod
