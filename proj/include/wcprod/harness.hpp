#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wcprod/graph.hpp"
#include "wcprod/independence.hpp"
#include "wcprod/products.hpp"
#include "wcprod/verdict.hpp"

namespace wcprod {

enum class InstanceShape { single_graph, graph_pair, graph_plus_n };

std::string_view to_string(InstanceShape shape) noexcept;

/// One input to a claim: a graph, an ordered pair of graphs, or a graph with
/// a clique order n (standing for G × K_n).
struct Instance {
    InstanceShape shape = InstanceShape::single_graph;
    Graph g;
    Graph h;
    int n = 0;

    static Instance single(Graph g);
    static Instance pair(Graph g, Graph h);
    static Instance with_clique(Graph g, int n);

    /// graph6 based: "G", "G x H" or "G x K<n>".
    std::string describe() const;
};

/// Independence facts about one graph, computed on first use.
class GraphFacts {
public:
    explicit GraphFacts(const Graph& g) : g_(g) {}

    const Graph& graph() const noexcept { return g_; }
    bool nontrivial_connected() const { return g_.order() >= 2 && g_.is_connected(); }
    int alpha();
    int i_number();
    bool well_covered();
    bool very_well_covered();
    VertexSet isolatable();

private:
    const Graph& g_;
    std::optional<int> alpha_;
    std::optional<int> i_;
    std::optional<bool> well_covered_;
    std::optional<VertexSet> isolatable_;
};

/// Lazily cached facts shared by every claim checked on one instance.
class InstanceContext {
public:
    explicit InstanceContext(const Instance& instance);

    const Instance& instance() const noexcept { return instance_; }
    GraphFacts& g() noexcept { return g_facts_; }
    /// Facts for H (pair instances) or K_n (graph_plus_n instances).
    GraphFacts& h() noexcept { return h_facts_; }

    /// G × H or G × K_n, depending on the shape.
    const ProductGraph& product();
    GraphFacts& product_facts();

private:
    Instance instance_;
    Graph right_;
    GraphFacts g_facts_;
    GraphFacts h_facts_;
    std::unique_ptr<ProductGraph> product_;
    std::unique_ptr<GraphFacts> product_facts_;
};

/// An executable claim: a hypothesis and a conclusion over one instance shape.
struct Claim {
    std::string id;
    InstanceShape shape;
    std::string statement;
    /// Returns the reason the hypothesis fails, or nullopt when it holds.
    std::function<std::optional<std::string>(InstanceContext&)> hypothesis_failure;
    /// Returns a witness when the conclusion fails, or nullopt when it holds.
    std::function<std::optional<nlohmann::json>(InstanceContext&)> conclusion_failure;
};

class ClaimRegistry {
public:
    /// The registry of every claim the library checks.
    static const ClaimRegistry& standard();

    void add(Claim claim);
    const std::vector<Claim>& claims() const noexcept { return claims_; }
    std::vector<std::string> ids() const;
    /// Throws Error for an unknown id.
    const Claim& find(std::string_view id) const;

    /// Throws Error for an unknown id or an instance of the wrong shape.
    ClaimVerdict verify(std::string_view id, const Instance& instance) const;
    ClaimVerdict verify(const Claim& claim, InstanceContext& context) const;

private:
    std::vector<Claim> claims_;
};

/// Evaluates only the conclusion, ignoring the hypothesis. Useful for
/// exhibiting what a counterexample witness looks like.
std::optional<nlohmann::json> check_conclusion(std::string_view id, const Instance& instance);

struct ClaimTally {
    std::int64_t holds = 0;
    std::int64_t vacuous = 0;
    std::vector<ClaimVerdict> counterexamples;
    std::optional<std::string> first_holds;  // earliest instance with a non-vacuous pass
};

/// Per-claim tallies over a run. Merging is associative.
struct SuiteReport {
    std::vector<std::string> order;  // claim ids in registry order
    std::map<std::string, ClaimTally> tallies;
    std::int64_t instances = 0;

    std::int64_t counterexample_count() const;
    bool passed() const { return counterexample_count() == 0; }
    /// Appends `later` (instances processed after this report's).
    void merge(const SuiteReport& later);
    nlohmann::json to_json() const;
};

struct SuiteOptions {
    int jobs = 1;
    /// Called after each block of instances with (done, total).
    std::function<void(std::size_t, std::size_t)> progress;
};

/// Checks every claim in `claim_ids` (all claims when empty) against every
/// instance of matching shape.
SuiteReport run_suite(const ClaimRegistry& registry, const std::vector<std::string>& claim_ids,
                      const std::vector<Instance>& instances, const SuiteOptions& options = {});

/// Corpus sizes for the standard suite.
struct SuiteCorpusConfig {
    int single_max_n = 6;      // connected labelled graphs
    int pair_max_n = 6;        // isomorphism classes, all graphs
    int pair_max_product = 36; // n(G)·n(H) cap for pair instances
    int kn_max_n = 5;          // all labelled graphs
    std::vector<int> clique_orders{2, 3};
};

/// Corpus instances plus targeted family instances (complete graphs, cycles,
/// H(k,n), balanced multipartite graphs) that exercise rare hypotheses.
std::vector<Instance> standard_instances(const SuiteCorpusConfig& config);

}  // namespace wcprod
