#include "wcprod/harness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "wcprod/errors.hpp"
#include "wcprod/families.hpp"
#include "wcprod/graph_io.hpp"
#include "wcprod/kn_analysis.hpp"

namespace wcprod {

using nlohmann::json;

std::string_view to_string(InstanceShape shape) noexcept {
    switch (shape) {
        case InstanceShape::single_graph: return "single-graph";
        case InstanceShape::graph_pair: return "graph-pair";
        case InstanceShape::graph_plus_n: return "graph-plus-n";
    }
    return "?";
}

Instance Instance::single(Graph g) { return {InstanceShape::single_graph, std::move(g), Graph{}, 0}; }
Instance Instance::pair(Graph g, Graph h) { return {InstanceShape::graph_pair, std::move(g), std::move(h), 0}; }
Instance Instance::with_clique(Graph g, int n) {
    if (n < 2) throw GraphError("clique order must be at least 2");
    return {InstanceShape::graph_plus_n, std::move(g), Graph{}, n};
}

std::string Instance::describe() const {
    switch (shape) {
        case InstanceShape::single_graph: return to_graph6(g);
        case InstanceShape::graph_pair: return to_graph6(g) + " x " + to_graph6(h);
        case InstanceShape::graph_plus_n: return to_graph6(g) + " x K" + std::to_string(n);
    }
    return "?";
}

int GraphFacts::alpha() {
    if (!alpha_) alpha_ = wcprod::alpha(g_);
    return *alpha_;
}

int GraphFacts::i_number() {
    if (!i_) i_ = wcprod::i_number(g_);
    return *i_;
}

bool GraphFacts::well_covered() {
    if (!well_covered_) well_covered_ = (alpha_ && i_) ? *alpha_ == *i_ : is_well_covered(g_);
    return *well_covered_;
}

bool GraphFacts::very_well_covered() {
    return well_covered() && g_.isolated_vertices().empty() && 2 * alpha() == g_.order();
}

VertexSet GraphFacts::isolatable() {
    if (!isolatable_) isolatable_ = isolatable_vertices(g_);
    return *isolatable_;
}

InstanceContext::InstanceContext(const Instance& instance)
    : instance_(instance),
      right_(instance.shape == InstanceShape::graph_pair     ? instance.h
             : instance.shape == InstanceShape::graph_plus_n ? complete_graph(instance.n)
                                                             : Graph{}),
      g_facts_(instance_.g),
      h_facts_(right_) {}

const ProductGraph& InstanceContext::product() {
    if (!product_) {
        const Graph& right = instance_.shape == InstanceShape::single_graph ? instance_.g : right_;
        product_ = std::make_unique<ProductGraph>(instance_.g, right);
    }
    return *product_;
}

GraphFacts& InstanceContext::product_facts() {
    if (!product_facts_) product_facts_ = std::make_unique<GraphFacts>(product().graph());
    return *product_facts_;
}

namespace {

using Failure = std::optional<std::string>;
using Witness = std::optional<json>;

json set_json(VertexSet s) { return s.to_vector(); }

// Shared hypothesis fragments; each returns the reason it fails.
Failure both_nontrivial_connected(InstanceContext& c) {
    if (!c.g().nontrivial_connected()) return "G is not a nontrivial connected graph";
    if (!c.h().nontrivial_connected()) return "H is not a nontrivial connected graph";
    return std::nullopt;
}

Failure product_well_covered(InstanceContext& c) {
    if (!c.product_facts().well_covered()) return "product is not well-covered";
    return std::nullopt;
}

Failure product_wc_not_vwc(InstanceContext& c) {
    if (auto f = both_nontrivial_connected(c)) return f;
    if (auto f = product_well_covered(c)) return f;
    if (c.product_facts().very_well_covered()) return "product is very well-covered";
    return std::nullopt;
}

Failure g_without_isolatable(InstanceContext& c) {
    if (c.g().graph().order() == 0) return "G is empty";
    if (!c.g().isolatable().empty()) return "G has isolatable vertices";
    return std::nullopt;
}

// Components of G - N[I] that are bipartite and have at least two vertices.
std::optional<VertexSet> nontrivial_bipartite_component(const Graph& g, VertexSet rest) {
    for (VertexSet comp : g.components(rest)) {
        if (comp.size() < 2) continue;
        if (induced_subgraph(g, comp).graph.is_bipartite()) return comp;
    }
    return std::nullopt;
}

void register_standard_claims(ClaimRegistry& r) {
    using S = InstanceShape;

    r.add({"inverse_image", S::graph_pair,
           "H without isolated vertices, I maximal independent in G => I x V(H) maximal independent in G x H",
           [](InstanceContext& c) -> Failure {
               if (!c.h().graph().isolated_vertices().empty()) return "H has an isolated vertex";
               return std::nullopt;
           },
           [](InstanceContext& c) -> Witness {
               const ProductGraph& p = c.product();
               Witness bad;
               for_each_maximal_independent_set(c.g().graph(), [&](VertexSet i) {
                   const VertexSet lifted = p.lift(i);
                   if (p.graph().is_maximal_independent(lifted)) return true;
                   const VertexSet missed = p.graph().vertices() - p.graph().closed_neighborhood(lifted);
                   bad = json{{"I", set_json(i)}, {"lifted", set_json(lifted)}, {"undominated", set_json(missed)}};
                   return false;
               });
               return bad;
           }});

    r.add({"trivial_bounds", S::graph_pair,
           "G, H without isolated vertices => alpha(GxH) >= max{a(G)n(H), a(H)n(G)}, i(GxH) <= min{i(G)n(H), i(H)n(G)}",
           [](InstanceContext& c) -> Failure {
               if (!c.g().graph().isolated_vertices().empty() || !c.h().graph().isolated_vertices().empty())
                   return "a factor has an isolated vertex";
               return std::nullopt;
           },
           [](InstanceContext& c) -> Witness {
               const int ng = c.g().graph().order(), nh = c.h().graph().order();
               const int lower = std::max(c.g().alpha() * nh, c.h().alpha() * ng);
               const int upper = std::min(c.g().i_number() * nh, c.h().i_number() * ng);
               const int ap = c.product_facts().alpha(), ip = c.product_facts().i_number();
               if (ap >= lower && ip <= upper) return std::nullopt;
               return json{{"alpha_product", ap}, {"alpha_lower_bound", lower}, {"i_product", ip},
                           {"i_upper_bound", upper}};
           }});

    r.add({"residual_wc", S::single_graph, "G well-covered, I independent => G - N[I] well-covered",
           [](InstanceContext& c) -> Failure {
               if (!c.g().well_covered()) return "G is not well-covered";
               return std::nullopt;
           },
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               Witness bad;
               for_each_independent_set(g, g.vertices(), [&](VertexSet i) {
                   const VertexSet rest = g.vertices() - g.closed_neighborhood(i);
                   if (is_well_covered(g, rest)) return true;
                   bad = json{{"I", set_json(i)}, {"residual", set_json(rest)},
                              {"residual_alpha", alpha(g, rest)}, {"residual_i", i_number(g, rest)}};
                   return false;
               });
               return bad;
           }});

    r.add({"clique_leftover", S::single_graph,
           "J independent with |J| = alpha(G) - 1 => J maximal or G - N[J] complete",
           [](InstanceContext&) -> Failure { return std::nullopt; },
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               const int target = c.g().alpha() - 1;
               Witness bad;
               for_each_independent_set(g, g.vertices(), [&](VertexSet j) {
                   if (j.size() != target) return true;
                   const VertexSet rest = g.vertices() - g.closed_neighborhood(j);
                   if (rest.empty() || g.is_clique(rest)) return true;
                   bad = json{{"J", set_json(j)}, {"residual", set_json(rest)}};
                   return false;
               });
               return bad;
           }});

    r.add({"wc_direct", S::graph_pair,
           "G, H with an edge each, G x H well-covered => G, H well-covered and alpha(G+)n(H+) = alpha(H+)n(G+)",
           [](InstanceContext& c) -> Failure {
               if (c.g().graph().edge_count() == 0) return "G has no edges";
               if (c.h().graph().edge_count() == 0) return "H has no edges";
               return product_well_covered(c);
           },
           [](InstanceContext& c) -> Witness {
               const bool wg = c.g().well_covered(), wh = c.h().well_covered();
               const Graph gp = split_isolated(c.g().graph()).plus.graph;
               const Graph hp = split_isolated(c.h().graph()).plus.graph;
               const int lhs = alpha(gp) * hp.order();
               const int rhs = alpha(hp) * gp.order();
               if (wg && wh && lhs == rhs) return std::nullopt;
               return json{{"g_well_covered", wg}, {"h_well_covered", wh}, {"alpha_gplus_times_n_hplus", lhs},
                           {"alpha_hplus_times_n_gplus", rhs}};
           }});

    r.add({"berge", S::single_graph, "G well-covered without isolated vertices => |S| <= |N(S)| for independent S",
           [](InstanceContext& c) -> Failure {
               if (!c.g().graph().isolated_vertices().empty()) return "G has an isolated vertex";
               if (!c.g().well_covered()) return "G is not well-covered";
               return std::nullopt;
           },
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               auto s = berge_violation(g);
               if (!s) return std::nullopt;
               return json{{"S", set_json(*s)}, {"N(S)", set_json(g.neighborhood(*s))}};
           }});

    r.add({"favaron", S::single_graph,
           "very well-covered <=> a perfect matching with Property (P) <=> all perfect matchings have (P)",
           [](InstanceContext&) -> Failure { return std::nullopt; },
           [](InstanceContext& c) -> Witness {
               ClaimVerdict v = favaron_equivalence_verdict(c.g().graph());
               if (v.holds()) return std::nullopt;
               return v.witness;
           }});

    r.add({"vwc_product", S::graph_pair,
           "G, H without isolated vertices, one very well-covered => (GxH wc <=> GxH vwc <=> G and H vwc)",
           [](InstanceContext& c) -> Failure {
               if (c.g().graph().order() == 0 || c.h().graph().order() == 0) return "a factor is empty";
               if (!c.g().graph().isolated_vertices().empty() || !c.h().graph().isolated_vertices().empty())
                   return "a factor has an isolated vertex";
               if (!c.g().very_well_covered() && !c.h().very_well_covered())
                   return "neither factor is very well-covered";
               return std::nullopt;
           },
           [](InstanceContext& c) -> Witness {
               const bool a = c.product_facts().well_covered();
               const bool b = c.product_facts().very_well_covered();
               const bool both = c.g().very_well_covered() && c.h().very_well_covered();
               if (a == b && b == both) return std::nullopt;
               return json{{"product_well_covered", a}, {"product_very_well_covered", b},
                           {"both_factors_very_well_covered", both}};
           }});

    r.add({"layer_sizes", S::graph_plus_n, "every maximal independent set of G x K_n meets each layer in 0, 1 or n",
           [](InstanceContext&) -> Failure { return std::nullopt; },
           [](InstanceContext& c) -> Witness {
               ClaimVerdict v = layer_cardinality_check(c.instance().g, c.instance().n);
               if (v.holds()) return std::nullopt;
               return v.witness;
           }});

    r.add({"kn_necessary", S::graph_plus_n,
           "G x K_n well-covered => G - N[x] has an isolated vertex whenever deg(x) >= n", product_well_covered,
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               for (Vertex x = 0; x < g.order(); ++x) {
                   if (g.degree(x) < c.instance().n) continue;
                   const VertexSet rest = g.vertices() - g.closed_neighborhood(VertexSet::single(x));
                   if (g.isolated_vertices(rest).empty()) return json{{"x", x}, {"residual", set_json(rest)}};
               }
               return std::nullopt;
           }});

    r.add({"bipartite_isolation", S::single_graph,
           "B bipartite, well-covered, min degree >= 2 => B - N[x] has an isolated vertex for every x",
           [](InstanceContext& c) -> Failure {
               const Graph& b = c.g().graph();
               if (b.order() == 0 || b.min_degree() < 2) return "minimum degree below 2";
               if (!b.is_bipartite()) return "not bipartite";
               if (!c.g().well_covered()) return "not well-covered";
               return std::nullopt;
           },
           [](InstanceContext& c) -> Witness {
               const Graph& b = c.g().graph();
               for (Vertex x = 0; x < b.order(); ++x) {
                   const VertexSet rest = b.vertices() - b.closed_neighborhood(VertexSet::single(x));
                   if (b.isolated_vertices(rest).empty()) return json{{"x", x}, {"residual", set_json(rest)}};
               }
               return std::nullopt;
           }});

    r.add({"closed_nbhd_size", S::graph_pair,
           "H nontrivial connected, G without isolatable vertices, GxH wc => |N[A]| = k n(G)/alpha(G) for |A| = k",
           [](InstanceContext& c) -> Failure {
               if (!c.h().nontrivial_connected()) return "H is not a nontrivial connected graph";
               if (auto f = g_without_isolatable(c)) return f;
               return product_well_covered(c);
           },
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               const int a = c.g().alpha();
               Witness bad;
               for_each_independent_set(g, g.vertices(), [&](VertexSet s) {
                   const int k = s.size();
                   if (k == 0) return true;
                   const int closed = g.closed_neighborhood(s).size();
                   if (closed * a == k * g.order()) return true;
                   bad = json{{"A", set_json(s)}, {"closed_neighborhood_size", closed}, {"alpha", a},
                              {"n", g.order()}};
                   return false;
               });
               return bad;
           }});

    r.add({"regularity", S::graph_pair,
           "G, H nontrivial connected, G without isolatable vertices, GxH wc => G regular of degree n(G)/alpha(G) - 1",
           [](InstanceContext& c) -> Failure {
               if (auto f = both_nontrivial_connected(c)) return f;
               if (auto f = g_without_isolatable(c)) return f;
               return product_well_covered(c);
           },
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               const int a = c.g().alpha();
               const auto degree = g.regular_degree();
               if (g.order() % a == 0 && degree && *degree == g.order() / a - 1) return std::nullopt;
               return json{{"alpha", a}, {"n", g.order()}, {"min_degree", g.min_degree()},
                           {"max_degree", g.max_degree()}};
           }});

    r.add({"k3_dichotomy", S::single_graph,
           "G nontrivial connected, G x K3 well-covered => G = K3 or G has an isolatable vertex",
           [](InstanceContext& c) -> Failure {
               if (!c.g().nontrivial_connected()) return "G is not a nontrivial connected graph";
               if (c.g().graph().order() * 3 > kMaxVertices) return "product too large";
               if (!is_well_covered(direct_product(c.g().graph(), complete_graph(3)).graph()))
                   return "G x K3 is not well-covered";
               return std::nullopt;
           },
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               if ((g.order() == 3 && g.is_complete()) || !c.g().isolatable().empty()) return std::nullopt;
               return json{{"order", g.order()}, {"isolatable", json::array()}};
           }});

    r.add({"no_isolatable_complete", S::graph_pair,
           "G, H nontrivial connected, GxH wc, G without isolatable vertices => G complete",
           [](InstanceContext& c) -> Failure {
               if (auto f = both_nontrivial_connected(c)) return f;
               if (auto f = g_without_isolatable(c)) return f;
               return product_well_covered(c);
           },
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               if (g.is_complete()) return std::nullopt;
               auto e = g.edge_within(g.vertices());
               for (Vertex u = 0; u < g.order(); ++u)
                   for (Vertex v = u + 1; v < g.order(); ++v)
                       if (!g.has_edge(u, v)) return json{{"non_edge", {u, v}}};
               return json{{"edge", e ? json{e->first, e->second} : json()}};
           }});

    r.add({"both_complete", S::graph_pair,
           "G, H nontrivial connected without isolatable vertices, GxH wc => G = H = K_n(G)",
           [](InstanceContext& c) -> Failure {
               if (auto f = both_nontrivial_connected(c)) return f;
               if (!c.g().isolatable().empty()) return "G has isolatable vertices";
               if (!c.h().isolatable().empty()) return "H has isolatable vertices";
               return product_well_covered(c);
           },
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               const Graph& h = c.h().graph();
               if (g.is_complete() && h.is_complete() && g.order() == h.order()) return std::nullopt;
               return json{{"g_complete", g.is_complete()}, {"h_complete", h.is_complete()},
                           {"n_g", g.order()}, {"n_h", h.order()}};
           }});

    r.add({"no_bipartite_residual", S::graph_pair,
           "G, H nontrivial connected, GxH wc not vwc => every bipartite component of G - N[I] is K1",
           product_wc_not_vwc,
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               Witness bad;
               for_each_independent_set(g, g.vertices(), [&](VertexSet i) {
                   const VertexSet rest = g.vertices() - g.closed_neighborhood(i);
                   auto comp = nontrivial_bipartite_component(g, rest);
                   if (!comp) return true;
                   bad = json{{"I", set_json(i)}, {"component", set_json(*comp)}};
                   return false;
               });
               return bad;
           }});

    r.add({"edge_triangle", S::graph_pair,
           "G, H nontrivial connected, GxH wc not vwc => every edge of G has an endpoint on a triangle",
           product_wc_not_vwc,
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               VertexSet in_triangle;
               for (auto [u, v] : g.edges())
                   if (const VertexSet common = g.neighbors(u) & g.neighbors(v); !common.empty())
                       in_triangle |= VertexSet::of({u, v}) | common;
               for (auto [u, v] : g.edges())
                   if (!in_triangle.contains(u) && !in_triangle.contains(v)) return json{{"edge", {u, v}}};
               return std::nullopt;
           }});

    r.add({"girth_three", S::graph_pair,
           "G, H nontrivial connected, GxH wc not vwc => girth(G) = girth(H) = 3", product_wc_not_vwc,
           [](InstanceContext& c) -> Witness {
               const Girth gg = c.g().graph().girth();
               const Girth gh = c.h().graph().girth();
               if (gg == Girth::finite(3) && gh == Girth::finite(3)) return std::nullopt;
               return json{{"girth_g", gg.to_string()}, {"girth_h", gh.to_string()}};
           }});

    r.add({"twins", S::single_graph,
           "I maximal independent, N(u) = N(v) => I meets N(u) or {u, v} is inside I",
           [](InstanceContext& c) -> Failure {
               const Graph& g = c.g().graph();
               for (Vertex u = 0; u < g.order(); ++u)
                   for (Vertex v = u + 1; v < g.order(); ++v)
                       if (g.neighbors(u) == g.neighbors(v)) return std::nullopt;
               return "G has no twins";
           },
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               std::vector<Edge> twin_pairs;
               for (Vertex u = 0; u < g.order(); ++u)
                   for (Vertex v = u + 1; v < g.order(); ++v)
                       if (g.neighbors(u) == g.neighbors(v)) twin_pairs.emplace_back(u, v);
               Witness bad;
               for_each_maximal_independent_set(g, [&](VertexSet i) {
                   for (auto [u, v] : twin_pairs) {
                       if (i.intersects(g.neighbors(u))) continue;
                       if (i.contains(u) && i.contains(v)) continue;
                       bad = json{{"I", set_json(i)}, {"u", u}, {"v", v}};
                       return false;
                   }
                   return true;
               });
               return bad;
           }});

    r.add({"h_family_product", S::graph_plus_n, "G = H(k, n-1) => G x K_n well-covered",
           [](InstanceContext& c) -> Failure {
               auto match = match_h_family(c.g().graph());
               if (!match || match->second + 1 != c.instance().n) return "G is not H(k, n-1)";
               return std::nullopt;
           },
           [](InstanceContext& c) -> Witness {
               if (c.product_facts().well_covered()) return std::nullopt;
               return json{{"alpha", c.product_facts().alpha()}, {"i", c.product_facts().i_number()}};
           }});

    r.add({"multipartite_square", S::single_graph,
           "G = K_{r,...,r} with m parts => G x G well-covered, every maximal independent set of size m r^2",
           [](InstanceContext& c) -> Failure {
               if (!match_balanced_multipartite(c.g().graph())) return "G is not a balanced complete multipartite graph";
               if (c.g().graph().order() * c.g().graph().order() > kMaxVertices) return "product too large";
               return std::nullopt;
           },
           [](InstanceContext& c) -> Witness {
               auto [m, r] = *match_balanced_multipartite(c.g().graph());
               const int expected = m * r * r;
               const int a = c.product_facts().alpha(), i = c.product_facts().i_number();
               if (a == expected && i == expected) return std::nullopt;
               return json{{"m", m}, {"r", r}, {"expected", expected}, {"alpha", a}, {"i", i}};
           }});

    r.add({"support_leaf_unique", S::single_graph,
           "G well-covered => every support vertex has exactly one leaf neighbour",
           [](InstanceContext& c) -> Failure {
               if (!c.g().well_covered()) return "G is not well-covered";
               return std::nullopt;
           },
           [](InstanceContext& c) -> Witness {
               const Graph& g = c.g().graph();
               for (Vertex x = 0; x < g.order(); ++x) {
                   VertexSet leaves;
                   for (Vertex u : g.neighbors(x))
                       if (g.degree(u) == 1) leaves.insert(u);
                   if (leaves.size() > 1) return json{{"support", x}, {"leaves", set_json(leaves)}};
               }
               return std::nullopt;
           }});
}

}  // namespace

void ClaimRegistry::add(Claim claim) {
    for (const auto& existing : claims_)
        if (existing.id == claim.id) throw Error("duplicate claim id " + claim.id);
    claims_.push_back(std::move(claim));
}

const ClaimRegistry& ClaimRegistry::standard() {
    static const ClaimRegistry registry = [] {
        ClaimRegistry r;
        register_standard_claims(r);
        return r;
    }();
    return registry;
}

std::vector<std::string> ClaimRegistry::ids() const {
    std::vector<std::string> out;
    for (const auto& c : claims_) out.push_back(c.id);
    return out;
}

const Claim& ClaimRegistry::find(std::string_view id) const {
    for (const auto& c : claims_)
        if (c.id == id) return c;
    throw Error("unknown claim id '" + std::string(id) + "'");
}

ClaimVerdict ClaimRegistry::verify(std::string_view id, const Instance& instance) const {
    const Claim& claim = find(id);
    if (claim.shape != instance.shape)
        throw Error("claim " + claim.id + " expects a " + std::string(to_string(claim.shape)) + " instance");
    InstanceContext context(instance);
    return verify(claim, context);
}

ClaimVerdict ClaimRegistry::verify(const Claim& claim, InstanceContext& context) const {
    ClaimVerdict verdict;
    verdict.claim_id = claim.id;
    verdict.instance = context.instance().describe();
    if (auto failed = claim.hypothesis_failure(context)) {
        verdict.status = ClaimStatus::vacuous;
        verdict.witness = {{"failed_hypothesis", *failed}};
        return verdict;
    }
    if (auto witness = claim.conclusion_failure(context)) {
        verdict.status = ClaimStatus::counterexample;
        verdict.witness = std::move(*witness);
    } else {
        verdict.status = ClaimStatus::holds;
    }
    return verdict;
}

std::optional<json> check_conclusion(std::string_view id, const Instance& instance) {
    const Claim& claim = ClaimRegistry::standard().find(id);
    InstanceContext context(instance);
    return claim.conclusion_failure(context);
}

std::int64_t SuiteReport::counterexample_count() const {
    std::int64_t total = 0;
    for (const auto& [id, tally] : tallies) total += static_cast<std::int64_t>(tally.counterexamples.size());
    return total;
}

void SuiteReport::merge(const SuiteReport& later) {
    for (const auto& id : later.order)
        if (std::find(order.begin(), order.end(), id) == order.end()) order.push_back(id);
    for (const auto& [id, tally] : later.tallies) {
        ClaimTally& mine = tallies[id];
        mine.holds += tally.holds;
        mine.vacuous += tally.vacuous;
        mine.counterexamples.insert(mine.counterexamples.end(), tally.counterexamples.begin(),
                                    tally.counterexamples.end());
        if (!mine.first_holds) mine.first_holds = tally.first_holds;
    }
    instances += later.instances;
}

json SuiteReport::to_json() const {
    json claims = json::object();
    for (const auto& id : order) {
        auto it = tallies.find(id);
        if (it == tallies.end()) continue;
        const ClaimTally& t = it->second;
        json ce = json::array();
        for (const auto& v : t.counterexamples) ce.push_back(wcprod::to_json(v));
        claims[id] = {{"holds", t.holds}, {"vacuous", t.vacuous}, {"counterexamples", ce}};
        if (t.first_holds) claims[id]["first_holds"] = *t.first_holds;
    }
    return {{"instances", instances}, {"counterexamples_total", counterexample_count()}, {"claims", claims}};
}

SuiteReport run_suite(const ClaimRegistry& registry, const std::vector<std::string>& claim_ids,
                      const std::vector<Instance>& instances, const SuiteOptions& options) {
    std::vector<const Claim*> selected;
    if (claim_ids.empty()) {
        for (const auto& c : registry.claims()) selected.push_back(&c);
    } else {
        for (const auto& id : claim_ids) selected.push_back(&registry.find(id));
    }

    constexpr std::size_t kBlock = 64;
    const std::size_t blocks = (instances.size() + kBlock - 1) / kBlock;
    std::vector<SuiteReport> partial(blocks);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;

    auto worker = [&] {
        for (std::size_t b = next++; b < blocks; b = next++) {
            SuiteReport& report = partial[b];
            for (const Claim* claim : selected) {
                report.order.push_back(claim->id);
                report.tallies[claim->id];
            }
            const std::size_t end = std::min(instances.size(), (b + 1) * kBlock);
            for (std::size_t k = b * kBlock; k < end; ++k) {
                InstanceContext context(instances[k]);
                ++report.instances;
                for (const Claim* claim : selected) {
                    if (claim->shape != instances[k].shape) continue;
                    ClaimVerdict v = registry.verify(*claim, context);
                    ClaimTally& t = report.tallies[claim->id];
                    if (v.holds()) {
                        ++t.holds;
                        if (!t.first_holds) t.first_holds = v.instance;
                    } else if (v.vacuous()) {
                        ++t.vacuous;
                    } else {
                        t.counterexamples.push_back(std::move(v));
                    }
                }
            }
            const std::size_t finished = ++done;
            if (options.progress) {
                std::lock_guard lock(progress_mutex);
                options.progress(std::min(instances.size(), finished * kBlock), instances.size());
            }
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SuiteReport total;
    for (const Claim* claim : selected) {
        total.order.push_back(claim->id);
        total.tallies[claim->id];
    }
    for (const auto& p : partial) total.merge(p);
    return total;
}

std::vector<Instance> standard_instances(const SuiteCorpusConfig& config) {
    std::vector<Instance> out;
    for_each_corpus_graph(config.single_max_n, true, [&](const Graph& g) {
        out.push_back(Instance::single(g));
        return true;
    });
    const auto classes = unlabeled_corpus(config.pair_max_n, false);
    for (const auto& g : classes)
        for (const auto& h : classes)
            if (g.order() * h.order() <= config.pair_max_product) out.push_back(Instance::pair(g, h));
    for_each_corpus_graph(config.kn_max_n, false, [&](const Graph& g) {
        for (int n : config.clique_orders) out.push_back(Instance::with_clique(g, n));
        return true;
    });

    // Targeted instances for hypotheses that corpora rarely meet.
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b) out.push_back(Instance::pair(complete_graph(a), complete_graph(b)));
    for (int a = 3; a <= 7; ++a)
        for (int b = 3; b <= 7; ++b) out.push_back(Instance::pair(cycle_graph(a), cycle_graph(b)));
    out.push_back(Instance::pair(disjoint_union(complete_graph(2), complete_graph(1)), complete_graph(2)));
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}})
        out.push_back(Instance::with_clique(h_family(k, n), n + 1));
    for (int r = 2; r <= 3; ++r) {
        out.push_back(Instance::pair(complete_graph(3), complete_multipartite({r, r, r})));
        out.push_back(Instance::pair(complete_multipartite({r, r, r}), complete_graph(3)));
        out.push_back(Instance::with_clique(complete_multipartite({r, r, r}), 3));
    }
    out.push_back(Instance::single(complete_multipartite({2, 2, 2})));
    out.push_back(Instance::single(h_family(4, 2)));
    return out;
}

}  // namespace wcprod
