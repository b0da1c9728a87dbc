#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcprod/vertex_set.hpp"

namespace wcprod {

using Edge = std::pair<Vertex, Vertex>;

/// Length of a shortest cycle, or infinite for forests.
class Girth {
public:
    static constexpr Girth infinite() noexcept { return Girth(); }
    static Girth finite(int length);

    constexpr bool is_infinite() const noexcept { return length_ == 0; }
    /// Cycle length; only meaningful when !is_infinite().
    constexpr int length() const noexcept { return length_; }

    constexpr bool operator==(const Girth&) const noexcept = default;

    std::string to_string() const;

private:
    constexpr Girth() noexcept = default;
    constexpr explicit Girth(int length) noexcept : length_(length) {}

    int length_ = 0;
};

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Vertex ids are 0..n-1 and adjacency is one 64-bit neighbour mask per
/// vertex. Every "modifying" operation returns a new graph.
class Graph {
public:
    /// The graph with no vertices.
    Graph() noexcept = default;

    /// Builds a graph from an edge list. Duplicate edges are merged.
    /// Throws GraphError on out-of-range endpoints or self-loops and
    /// CapacityError when n exceeds 64.
    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    /// Builds a graph from neighbour masks, validating symmetry,
    /// irreflexivity and that no bit >= n is set.
    static Graph from_adjacency(const std::vector<std::uint64_t>& adjacency);

    /// Edgeless graph on n vertices.
    static Graph empty(int n);

    int order() const noexcept { return n_; }
    int edge_count() const noexcept;
    VertexSet vertices() const noexcept { return VertexSet::full(n_); }

    VertexSet neighbors(Vertex v) const noexcept { return adj_[v]; }
    int degree(Vertex v) const noexcept { return adj_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const noexcept { return adj_[u].contains(v); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// N(S): union of the neighbourhoods of the members of S.
    VertexSet neighborhood(VertexSet s) const noexcept;
    /// N[S] = N(S) ∪ S.
    VertexSet closed_neighborhood(VertexSet s) const noexcept { return neighborhood(s) | s; }

    bool is_independent(VertexSet s) const noexcept;
    /// Some edge with both ends in S, if one exists.
    std::optional<Edge> edge_within(VertexSet s) const noexcept;
    /// True when S is independent and N[S] covers `within` (default: all of V).
    bool is_maximal_independent(VertexSet s) const noexcept { return is_maximal_independent(s, vertices()); }
    bool is_maximal_independent(VertexSet s, VertexSet within) const noexcept;

    int min_degree() const noexcept;
    int max_degree() const noexcept;
    VertexSet isolated_vertices() const noexcept { return isolated_vertices(vertices()); }
    /// Vertices of `within` with no neighbour in `within`.
    VertexSet isolated_vertices(VertexSet within) const noexcept;
    bool is_complete() const noexcept;
    /// True when G[S] is a complete graph (vacuously for |S| <= 1).
    bool is_clique(VertexSet s) const noexcept;

    /// Connected components restricted to `within`, each as a vertex set,
    /// ordered by smallest member.
    std::vector<VertexSet> components(VertexSet within) const;
    std::vector<VertexSet> components() const { return components(vertices()); }
    bool is_connected() const;

    /// Proper 2-colouring (0/1 per vertex) if G is bipartite.
    std::optional<std::vector<int>> bipartition() const;
    bool is_bipartite() const { return bipartition().has_value(); }
    Girth girth() const;
    /// Common degree if every vertex has the same degree.
    std::optional<int> regular_degree() const noexcept;
    bool every_edge_in_triangle() const noexcept;

    /// Display names, empty when none were attached.
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;
    /// Label of v, or its decimal id.
    std::string vertex_name(Vertex v) const;

    /// The graph with vertex v renamed perm[v].
    Graph relabeled(const std::vector<Vertex>& perm) const;

    /// Structural equality; labels are ignored.
    bool operator==(const Graph& other) const noexcept;

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
    std::vector<std::string> labels_;
};

/// An induced subgraph together with the original id of each of its vertices.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> original;  // original[new_id] = old_id

    /// Maps a vertex set of `graph` back to the parent graph's ids.
    VertexSet to_original(VertexSet s) const;
};

/// G[S], vertices renumbered in increasing order of original id.
Subgraph induced_subgraph(const Graph& g, VertexSet s);

/// G - N[I]. I need not be independent.
Subgraph delete_closed_neighborhood(const Graph& g, VertexSet i);

struct IsolatedSplit {
    VertexSet isolated;  // G_0
    Subgraph plus;       // G^+ = G - G_0
};

IsolatedSplit split_isolated(const Graph& g);

/// G ∪ H with H's vertices shifted by n(G).
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace wcprod
