#pragma once

#include <nlohmann/json.hpp>

#include "wcprod/graph.hpp"
#include "wcprod/independence.hpp"
#include "wcprod/kn_analysis.hpp"
#include "wcprod/products.hpp"

namespace wcprod {

nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(const WellCoveredReport& report);
/// [V_0, V_1, ..., V_n, V_[n]] as arrays of vertices.
nlohmann::json to_json(const WeakPartition& partition);
nlohmann::json to_json(const KnReport& report);
/// {"graph6", "nG", "nH"}; the factor orders recover the coordinates.
nlohmann::json to_json(const ProductGraph& product);

/// girth, regularity, bipartiteness, isolatable vertices, components.
nlohmann::json structural_facts(const Graph& g);

}  // namespace wcprod
