#include "wcprod/serialize.hpp"

#include "wcprod/graph_io.hpp"

namespace wcprod {

using nlohmann::json;

std::string_view to_string(ClaimStatus status) noexcept {
    switch (status) {
        case ClaimStatus::holds: return "holds";
        case ClaimStatus::vacuous: return "vacuous";
        case ClaimStatus::counterexample: return "counterexample";
    }
    return "?";
}

json to_json(const ClaimVerdict& verdict) {
    return {{"claim", verdict.claim_id},
            {"instance", verdict.instance},
            {"status", std::string(to_string(verdict.status))},
            {"witness", verdict.witness}};
}

json to_json(VertexSet s) { return s.to_vector(); }

json to_json(const WellCoveredReport& r) {
    return {{"n", r.n},
            {"alpha", r.alpha},
            {"i", r.i_number},
            {"well_covered", r.well_covered},
            {"very_well_covered", r.very_well_covered},
            {"witness_min", to_json(r.witness_min)},
            {"witness_max", to_json(r.witness_max)}};
}

json to_json(const WeakPartition& p) {
    json parts = json::array();
    parts.push_back(to_json(p.v0()));
    for (int k = 1; k <= p.clique_order(); ++k) parts.push_back(to_json(p.v(k)));
    parts.push_back(to_json(p.bracket()));
    return parts;
}

json to_json(const KnReport& r) {
    json out = {{"n", r.n},
                {"i", r.i_value},
                {"alpha", r.alpha_value},
                {"well_covered", r.i_value == r.alpha_value},
                {"engine", r.engine},
                {"nodes", r.nodes}};
    out["argmin"] = r.argmin ? to_json(*r.argmin) : json();
    out["argmax"] = r.argmax ? to_json(*r.argmax) : json();
    return out;
}

json to_json(const ProductGraph& p) {
    return {{"graph6", to_graph6(p.graph())}, {"nG", p.left_order()}, {"nH", p.right_order()}};
}

json structural_facts(const Graph& g) {
    const auto degree = g.regular_degree();
    return {{"order", g.order()},
            {"size", g.edge_count()},
            {"girth", g.girth().to_string()},
            {"regular_degree", degree ? json(*degree) : json()},
            {"bipartite", g.is_bipartite()},
            {"connected", g.is_connected()},
            {"isolated", to_json(g.isolated_vertices())},
            {"isolatable", to_json(isolatable_vertices(g))}};
}

}  // namespace wcprod
