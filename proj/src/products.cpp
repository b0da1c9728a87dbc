#include "wcprod/products.hpp"

#include <algorithm>

#include "wcprod/errors.hpp"
#include "wcprod/graph_io.hpp"
#include "wcprod/independence.hpp"

namespace wcprod {

namespace {

Graph build_product(const Graph& g, const Graph& h) {
    const int ng = g.order();
    const int nh = h.order();
    if (ng * nh > kMaxVertices)
        throw CapacityError("direct product would have " + std::to_string(ng * nh) + " vertices; the limit is " +
                            std::to_string(kMaxVertices));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(ng) * nh, 0);
    for (Vertex a = 0; a < ng; ++a) {
        for (Vertex b = 0; b < nh; ++b) {
            std::uint64_t mask = 0;
            for (Vertex c : g.neighbors(a)) mask |= h.neighbors(b).bits() << (c * nh);
            adj[a * nh + b] = mask;
        }
    }
    return Graph::from_adjacency(adj);
}

}  // namespace

ProductGraph::ProductGraph(Graph g, Graph h)
    : left_(std::move(g)), right_(std::move(h)), product_(build_product(left_, right_)) {}

VertexSet ProductGraph::layer_h(Vertex g) const noexcept {
    return VertexSet(VertexSet::full(right_.order()).bits() << (g * right_.order()));
}

VertexSet ProductGraph::layer_g(Vertex h) const noexcept {
    VertexSet out;
    for (Vertex g = 0; g < left_.order(); ++g) out.insert(index(g, h));
    return out;
}

VertexSet ProductGraph::project_g(VertexSet s) const noexcept {
    VertexSet out;
    for (Vertex v : s) out.insert(coordinates(v).first);
    return out;
}

VertexSet ProductGraph::project_h(VertexSet s) const noexcept {
    VertexSet out;
    for (Vertex v : s) out.insert(coordinates(v).second);
    return out;
}

VertexSet ProductGraph::lift(VertexSet s) const noexcept {
    VertexSet out;
    for (Vertex g : s) out |= layer_h(g);
    return out;
}

ProductGraph direct_product(const Graph& g, const Graph& h) { return ProductGraph(g, h); }

VertexSet lift_independent(const ProductGraph& p, VertexSet i) {
    if (!i.subset_of(p.left().vertices())) throw GraphError("set contains vertices outside the left factor");
    if (auto edge = p.left().edge_within(i))
        throw GraphError("set is not independent: edge (" + std::to_string(edge->first) + "," +
                         std::to_string(edge->second) + ")");
    return p.lift(i);
}

ClaimVerdict product_bounds_check(const Graph& g, const Graph& h) {
    ClaimVerdict verdict;
    verdict.claim_id = "trivial_bounds";
    verdict.instance = to_graph6(g) + " x " + to_graph6(h);
    if (!g.isolated_vertices().empty() || !h.isolated_vertices().empty()) {
        verdict.status = ClaimStatus::vacuous;
        verdict.witness = {{"failed_hypothesis", "a factor has an isolated vertex"}};
        return verdict;
    }
    const ProductGraph p(g, h);
    const int alpha_p = alpha(p.graph());
    const int i_p = i_number(p.graph());
    const int ag = alpha(g), ah = alpha(h), ig = i_number(g), ih = i_number(h);
    const int lower = std::max(ag * h.order(), ah * g.order());
    const int upper = std::min(ig * h.order(), ih * g.order());
    verdict.witness = {{"alpha_product", alpha_p}, {"alpha_lower_bound", lower},
                       {"i_product", i_p},         {"i_upper_bound", upper},
                       {"alpha_g", ag},            {"alpha_h", ah},
                       {"i_g", ig},                {"i_h", ih}};
    verdict.status = (alpha_p >= lower && i_p <= upper) ? ClaimStatus::holds : ClaimStatus::counterexample;
    return verdict;
}

}  // namespace wcprod
