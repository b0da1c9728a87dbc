#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wcprod/graph.hpp"
#include "wcprod/products.hpp"
#include "wcprod/verdict.hpp"

namespace wcprod {

/// A weak partition V_0, V_1, ..., V_n, V_[n] of V(G) describing one
/// maximal independent set of G × K_n.
///
/// Each vertex carries a class label: 0 for V_0, k in 1..n for V_k and n+1
/// for V_[n]. Parts may be empty. The partition is "valid" when:
///   1. no edge joins V_k (k in 1..n) to a vertex outside V_0 ∪ V_k;
///   2. no vertex of V_k is isolated in G[V_k];
///   3. V_[n] is independent;
///   4. every vertex of V_0 has a neighbour in V_[n] or neighbours in two
///      different classes V_j, V_k.
class WeakPartition {
public:
    /// Throws GraphError when a label is outside 0..n+1 or the size is wrong.
    WeakPartition(Graph g, int n, std::vector<int> labels);

    /// Builds from explicit parts; throws GraphError unless the parts are
    /// pairwise disjoint and cover V(G).
    static WeakPartition from_parts(Graph g, VertexSet v0, const std::vector<VertexSet>& classes,
                                    VertexSet bracket);

    const Graph& graph() const noexcept { return graph_; }
    int clique_order() const noexcept { return n_; }
    const std::vector<int>& labels() const noexcept { return labels_; }

    VertexSet v0() const noexcept { return part(0); }
    /// V_k for k in 1..n.
    VertexSet v(int k) const noexcept { return part(k); }
    VertexSet bracket() const noexcept { return part(n_ + 1); }

    /// Conditions 1-4 in order.
    std::array<bool, 4> conditions() const;
    /// Smallest violated condition number, if any.
    std::optional<int> violated_condition() const;
    bool valid() const { return !violated_condition().has_value(); }

    bool operator==(const WeakPartition& other) const noexcept {
        return n_ == other.n_ && labels_ == other.labels_ && graph_ == other.graph_;
    }

private:
    VertexSet part(int label) const noexcept;

    Graph graph_;
    int n_;
    std::vector<int> labels_;
};

/// n·|V_[n]| + Σ|V_k|. Throws GraphError naming the violated condition when
/// the partition is not valid.
int partition_weight(const WeakPartition& p);

/// The independent set of G × K_n encoded by p: {(g, k) : g ∈ V_k} together
/// with the whole K_n-layer over every g ∈ V_[n]. K_n's vertex k-1 stands for
/// label k, so (g, k) has product index g·n + k - 1.
VertexSet mis_from_partition(const WeakPartition& p);

/// Inverse of mis_from_partition. Throws GraphError when I is not a maximal
/// independent set of G × K_n or meets some layer in a number of vertices
/// other than 0, 1 or n.
WeakPartition partition_from_mis(const Graph& g, int n, VertexSet i);

/// Calls visit(labels, weight) for every valid weak partition. With
/// `reduce_symmetry`, the nonempty classes V_k must appear in increasing
/// order of their smallest vertex, so each partition is seen once up to
/// renaming 1..n. `visit` returns false to stop. Returns the number of search
/// nodes expanded, or nullopt when `node_budget` was exhausted first.
std::optional<std::uint64_t> for_each_valid_labeling(
    const Graph& g, int n, bool reduce_symmetry, std::uint64_t node_budget,
    const std::function<bool(std::span<const int> labels, int weight)>& visit);

std::vector<WeakPartition> valid_weak_partitions(const Graph& g, int n, bool reduce_symmetry);

struct KnReport {
    int n = 0;
    int i_value = 0;
    int alpha_value = 0;
    std::optional<WeakPartition> argmin;
    std::optional<WeakPartition> argmax;
    std::string engine;  // "partition" or "brute_force"
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// i(G × K_n) and α(G × K_n) as the minimum and maximum partition weight.
/// Falls back to enumerating the materialised product when the search
/// exceeds `node_budget` nodes. Throws GraphError for n < 2.
KnReport kn_alpha_i(const Graph& g, int n, std::uint64_t node_budget = kDefaultNodeBudget);

/// Every maximal independent set of G × K_n meets every K_n-layer in 0, 1 or
/// n vertices.
ClaimVerdict layer_cardinality_check(const Graph& g, int n);

/// If G × K_n is well-covered, G - N[x] has an isolated vertex for every x of
/// degree at least n. Vacuous when the product is not well-covered.
ClaimVerdict necessary_condition_check(const Graph& g, int n);

/// For bipartite well-covered B with minimum degree >= 2, B - N[x] has an
/// isolated vertex for every x. Vacuous otherwise.
ClaimVerdict bipartite_isolation_check(const Graph& b);

}  // namespace wcprod
