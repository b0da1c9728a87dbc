#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcprod/graph.hpp"

namespace wcprod {

Graph complete_graph(int n);
/// Throws GraphError for n < 3.
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{s1, s2, ...}; every part size must be positive.
Graph complete_multipartite(const std::vector<int>& sizes);

/// H(k, n): a clique on blocks A_1..A_k of n vertices each, plus an
/// independent set z_1..z_k with N(z_i) = A_i. Vertices 0..kn-1 are the
/// blocks in order; z_i is vertex kn + i - 1. For n = 2 the block vertices
/// are labelled x_i, y_i.
Graph h_family(int k, int n);

/// The corona K_k ∘ K_1, i.e. H(k, 1).
Graph corona(int k);

/// A parsed family description such as "h:4,2", "kpartite:2,2,2" or
/// "cycle:7".
struct FamilySpec {
    enum class Tag { complete, cycle, path, complete_multipartite, h_family, corona_with_k1, custom, empty };

    Tag tag = Tag::complete;
    std::vector<int> params;
    std::vector<Edge> edges;  // custom only

    /// Throws ParseError with the byte offset of the problem.
    static FamilySpec parse(std::string_view text);

    Graph build() const;
    std::string to_string() const;
};

/// Tag names accepted by FamilySpec::parse, for help texts.
std::vector<std::string> family_tags();

/// Calls visit(G) for every labelled graph on exactly n vertices in
/// increasing edge-mask order (bit b of the mask is the b-th vertex pair in
/// graph6 order). Throws CapacityError for n > 7. `visit` returns false to
/// stop.
void for_each_labeled_graph(int n, bool connected_only, const std::function<bool(const Graph&)>& visit);

/// Every labelled graph on 1..max_n vertices, ordered by (n, edge mask).
void for_each_corpus_graph(int max_n, bool connected_only, const std::function<bool(const Graph&)>& visit);

/// Materialised corpus; limited to max_n <= 6 (use the streaming form for 7).
std::vector<Graph> corpus(int max_n, bool connected_only);

/// Lexicographically smallest edge mask over all vertex relabellings.
/// Exhaustive over permutations, so limited to n <= 8.
std::uint64_t canonical_mask(const Graph& g);
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class on 1..max_n vertices (max_n <= 6),
/// ordered by (n, canonical mask).
std::vector<Graph> unlabeled_corpus(int max_n, bool connected_only);

/// (k, n) when G is exactly H(k, n) up to isomorphism, with n >= 1.
std::optional<std::pair<int, int>> match_h_family(const Graph& g);

/// (m, r) when G is the complete m-partite graph with all parts of size r.
std::optional<std::pair<int, int>> match_balanced_multipartite(const Graph& g);

}  // namespace wcprod
