#include "wcprod/graph.hpp"

#include <algorithm>
#include <limits>

#include "wcprod/errors.hpp"

namespace wcprod {

Girth Girth::finite(int length) {
    if (length < 3) throw GraphError("girth must be at least 3, got " + std::to_string(length));
    return Girth(length);
}

std::string Girth::to_string() const { return is_infinite() ? "infinite" : std::to_string(length_); }

namespace {

void check_order(int n) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    if (n > kMaxVertices)
        throw CapacityError("graph has " + std::to_string(n) + " vertices; the limit is " +
                            std::to_string(kMaxVertices));
}

}  // namespace

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    check_order(n);
    Graph g;
    g.n_ = n;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
    }
    return g;
}

Graph Graph::from_adjacency(const std::vector<std::uint64_t>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    check_order(n);
    Graph g;
    g.n_ = n;
    const VertexSet all = VertexSet::full(n);
    for (Vertex v = 0; v < n; ++v) {
        VertexSet nb(adjacency[v]);
        if (!nb.subset_of(all)) throw GraphError("neighbour mask of " + std::to_string(v) + " exceeds n");
        if (nb.contains(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
        g.adj_[v] = nb;
    }
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.adj_[v])
            if (!g.adj_[u].contains(v))
                throw GraphError("adjacency is not symmetric at (" + std::to_string(v) + "," +
                                 std::to_string(u) + ")");
    return g;
}

Graph Graph::empty(int n) {
    check_order(n);
    Graph g;
    g.n_ = n;
    return g;
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (Vertex v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::neighborhood(VertexSet s) const noexcept {
    VertexSet out;
    for (Vertex v : s) out |= adj_[v];
    return out;
}

bool Graph::is_independent(VertexSet s) const noexcept {
    for (Vertex v : s)
        if (adj_[v].intersects(s)) return false;
    return true;
}

std::optional<Edge> Graph::edge_within(VertexSet s) const noexcept {
    for (Vertex v : s) {
        VertexSet hit = adj_[v] & s;
        if (!hit.empty()) return Edge{v, hit.first()};
    }
    return std::nullopt;
}

bool Graph::is_maximal_independent(VertexSet s, VertexSet within) const noexcept {
    return s.subset_of(within) && is_independent(s) && within.subset_of(closed_neighborhood(s));
}

int Graph::min_degree() const noexcept {
    int best = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return n_ == 0 ? 0 : best;
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

VertexSet Graph::isolated_vertices(VertexSet within) const noexcept {
    VertexSet out;
    for (Vertex v : within & vertices())
        if (!adj_[v].intersects(within)) out.insert(v);
    return out;
}

bool Graph::is_complete() const noexcept { return is_clique(vertices()); }

bool Graph::is_clique(VertexSet s) const noexcept {
    for (Vertex v : s)
        if (!(s - VertexSet::single(v)).subset_of(adj_[v])) return false;
    return true;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next = (neighborhood(frontier) & within) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

std::optional<std::vector<int>> Graph::bipartition() const {
    std::vector<int> color(n_, -1);
    for (VertexSet comp : components()) {
        Vertex root = comp.first();
        color[root] = 0;
        VertexSet frontier = VertexSet::single(root);
        VertexSet seen = frontier;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) {
                for (Vertex u : adj_[v]) {
                    if (color[u] == -1) {
                        color[u] = 1 - color[v];
                        next.insert(u);
                    } else if (color[u] == color[v]) {
                        return std::nullopt;
                    }
                }
            }
            next -= seen;
            seen |= next;
            frontier = next;
        }
    }
    return color;
}

Girth Graph::girth() const {
    // Shortest cycle through edge uv is 1 + dist(u, v) in G - uv.
    int best = std::numeric_limits<int>::max();
    for (auto [u, v] : edges()) {
        VertexSet seen = VertexSet::single(u);
        VertexSet frontier = seen;
        int dist = 0;
        bool found = false;
        while (!frontier.empty() && !found && dist + 1 < best) {
            VertexSet next;
            for (Vertex w : frontier) {
                VertexSet nb = adj_[w];
                if (w == u) nb.erase(v);
                next |= nb;
            }
            next -= seen;
            ++dist;
            if (next.contains(v)) found = true;
            seen |= next;
            frontier = next;
        }
        if (found) best = std::min(best, dist + 1);
    }
    return best == std::numeric_limits<int>::max() ? Girth::infinite() : Girth::finite(best);
}

std::optional<int> Graph::regular_degree() const noexcept {
    if (n_ == 0) return 0;
    const int d = degree(0);
    for (Vertex v = 1; v < n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

bool Graph::every_edge_in_triangle() const noexcept {
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v && !adj_[u].intersects(adj_[v])) return false;
    return true;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw GraphError("expected " + std::to_string(n_) + " labels, got " + std::to_string(labels.size()));
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

std::string Graph::vertex_name(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size does not match vertex count");
    Graph g;
    g.n_ = n_;
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex u : adj_[v]) g.adj_[perm[v]].insert(perm[u]);
    if (!labels_.empty()) {
        g.labels_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) g.labels_[perm[v]] = labels_[v];
    }
    return g;
}

bool Graph::operator==(const Graph& other) const noexcept {
    if (n_ != other.n_) return false;
    for (Vertex v = 0; v < n_; ++v)
        if (adj_[v] != other.adj_[v]) return false;
    return true;
}

VertexSet Subgraph::to_original(VertexSet s) const {
    VertexSet out;
    for (Vertex v : s) out.insert(original[v]);
    return out;
}

Subgraph induced_subgraph(const Graph& g, VertexSet s) {
    s &= g.vertices();
    Subgraph sub;
    sub.original = s.to_vector();
    std::vector<int> position(g.order(), -1);
    for (std::size_t i = 0; i < sub.original.size(); ++i) position[sub.original[i]] = static_cast<int>(i);
    std::vector<std::uint64_t> adj(sub.original.size(), 0);
    for (std::size_t i = 0; i < sub.original.size(); ++i)
        for (Vertex u : g.neighbors(sub.original[i]) & s) adj[i] |= std::uint64_t{1} << position[u];
    sub.graph = Graph::from_adjacency(adj);
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (Vertex v : sub.original) labels.push_back(g.labels()[v]);
        sub.graph = sub.graph.with_labels(std::move(labels));
    }
    return sub;
}

Subgraph delete_closed_neighborhood(const Graph& g, VertexSet i) {
    return induced_subgraph(g, g.vertices() - g.closed_neighborhood(i));
}

IsolatedSplit split_isolated(const Graph& g) {
    VertexSet isolated = g.isolated_vertices();
    return {isolated, induced_subgraph(g, g.vertices() - isolated)};
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxVertices) throw CapacityError("disjoint union would have " + std::to_string(n) + " vertices");
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    return Graph::from_edge_list(n, edges);
}

}  // namespace wcprod
