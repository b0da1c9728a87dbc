#include "wcprod/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "wcprod/errors.hpp"

namespace wcprod {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw GraphError(message);
}

constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::uint64_t> adj(n, 0);
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((mask >> b) & 1U) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
    return Graph::from_adjacency(adj);
}

struct TagName {
    std::string_view name;
    FamilySpec::Tag tag;
};

constexpr TagName kTagNames[] = {
    {"complete", FamilySpec::Tag::complete},
    {"cycle", FamilySpec::Tag::cycle},
    {"path", FamilySpec::Tag::path},
    {"kpartite", FamilySpec::Tag::complete_multipartite},
    {"multipartite", FamilySpec::Tag::complete_multipartite},
    {"h", FamilySpec::Tag::h_family},
    {"corona", FamilySpec::Tag::corona_with_k1},
    {"custom", FamilySpec::Tag::custom},
    {"empty", FamilySpec::Tag::empty},
};

std::string_view tag_name(FamilySpec::Tag tag) {
    for (const auto& t : kTagNames)
        if (t.tag == tag) return t.name;
    return "?";
}

// Parses a non-negative integer at text[pos...]; advances pos.
int parse_int(std::string_view text, std::size_t& pos) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || value < 0) throw ParseError("expected a non-negative integer", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
}

}  // namespace

Graph complete_graph(int n) {
    require(n >= 0, "complete graph needs n >= 0");
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    require(!sizes.empty(), "complete multipartite graph needs at least one part");
    std::vector<int> part_of;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        require(sizes[p] >= 1, "multipartite part sizes must be positive");
        part_of.insert(part_of.end(), sizes[p], static_cast<int>(p));
    }
    const int n = static_cast<int>(part_of.size());
    if (n > kMaxVertices) throw CapacityError("complete multipartite graph exceeds 64 vertices");
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph h_family(int k, int n) {
    require(k >= 1 && n >= 1, "H(k,n) needs k >= 1 and n >= 1");
    const int order = k * (n + 1);
    if (order > kMaxVertices) throw CapacityError("H(" + std::to_string(k) + "," + std::to_string(n) +
                                                  ") has " + std::to_string(order) + " vertices; the limit is 64");
    const int clique = k * n;
    std::vector<Edge> edges;
    for (int j = 1; j < clique; ++j)
        for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
    std::vector<std::string> labels(order);
    for (int block = 0; block < k; ++block) {
        const Vertex z = clique + block;
        labels[z] = "z" + std::to_string(block + 1);
        for (int j = 0; j < n; ++j) {
            const Vertex a = block * n + j;
            edges.emplace_back(a, z);
            labels[a] = n == 2 ? std::string(j == 0 ? "x" : "y") + std::to_string(block + 1)
                               : "a" + std::to_string(block + 1) + "." + std::to_string(j + 1);
        }
    }
    return Graph::from_edge_list(order, edges).with_labels(std::move(labels));
}

Graph corona(int k) { return h_family(k, 1); }

FamilySpec FamilySpec::parse(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("family spec needs the form tag:params", text.size());
    const std::string_view name = text.substr(0, colon);
    FamilySpec spec;
    bool known = false;
    for (const auto& t : kTagNames)
        if (t.name == name) {
            spec.tag = t.tag;
            known = true;
        }
    if (!known) throw ParseError("unknown family tag '" + std::string(name) + "'", 0);

    std::size_t pos = colon + 1;
    if (spec.tag == Tag::custom) {
        spec.params.push_back(parse_int(text, pos));
        if (pos < text.size()) {
            if (text[pos] != ':') throw ParseError("expected ':' before the edge list", pos);
            ++pos;
            while (pos < text.size()) {
                int u = parse_int(text, pos);
                if (pos >= text.size() || text[pos] != '-') throw ParseError("expected '-' inside an edge", pos);
                ++pos;
                int v = parse_int(text, pos);
                spec.edges.emplace_back(u, v);
                if (pos < text.size()) {
                    if (text[pos] != ',') throw ParseError("expected ',' between edges", pos);
                    ++pos;
                }
            }
        }
        return spec;
    }

    while (pos < text.size()) {
        spec.params.push_back(parse_int(text, pos));
        if (pos < text.size()) {
            if (text[pos] != ',') throw ParseError("expected ',' between parameters", pos);
            ++pos;
            if (pos == text.size()) throw ParseError("trailing ','", pos);
        }
    }
    std::size_t expected = 1;
    if (spec.tag == Tag::h_family) expected = 2;
    if (spec.tag == Tag::complete_multipartite) {
        if (spec.params.empty()) throw ParseError("kpartite needs at least one part size", pos);
    } else if (spec.params.size() != expected) {
        throw ParseError(std::string(name) + " takes " + std::to_string(expected) + " parameter(s)", colon + 1);
    }
    return spec;
}

Graph FamilySpec::build() const {
    switch (tag) {
        case Tag::complete: return complete_graph(params.at(0));
        case Tag::cycle: return cycle_graph(params.at(0));
        case Tag::path: return path_graph(params.at(0));
        case Tag::complete_multipartite: return complete_multipartite(params);
        case Tag::h_family: return h_family(params.at(0), params.at(1));
        case Tag::corona_with_k1: return corona(params.at(0));
        case Tag::custom: return Graph::from_edge_list(params.at(0), edges);
        case Tag::empty: return Graph::empty(params.at(0));
    }
    throw GraphError("unknown family tag");
}

std::string FamilySpec::to_string() const {
    std::string out(tag_name(tag));
    out += ':';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(params[i]);
    }
    if (tag == Tag::custom && !edges.empty()) {
        out += ':';
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
        }
    }
    return out;
}

std::vector<std::string> family_tags() {
    std::vector<std::string> out;
    for (const auto& t : kTagNames) out.emplace_back(t.name);
    return out;
}

void for_each_labeled_graph(int n, bool connected_only, const std::function<bool(const Graph&)>& visit) {
    if (n > 7) throw CapacityError("exhaustive enumeration is limited to 7 vertices, got " + std::to_string(n));
    if (n < 0) throw GraphError("vertex count must be non-negative");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t masks = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (connected_only && !g.is_connected()) continue;
        if (!visit(g)) return;
    }
}

void for_each_corpus_graph(int max_n, bool connected_only, const std::function<bool(const Graph&)>& visit) {
    if (max_n > 7) throw CapacityError("exhaustive corpus is limited to 7 vertices, got " + std::to_string(max_n));
    bool go = true;
    for (int n = 1; n <= max_n && go; ++n)
        for_each_labeled_graph(n, connected_only, [&](const Graph& g) { return go = visit(g); });
}

std::vector<Graph> corpus(int max_n, bool connected_only) {
    if (max_n > 6)
        throw CapacityError("materialised corpus is limited to 6 vertices; stream larger corpora instead");
    std::vector<Graph> out;
    for_each_corpus_graph(max_n, connected_only, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::uint64_t canonical_mask(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw CapacityError("canonical form by exhaustive relabelling is limited to 8 vertices");
    const auto edges = g.edges();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        for (auto [u, v] : edges) {
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            mask |= std::uint64_t{1} << pair_index(a, b);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph canonical_form(const Graph& g) { return graph_from_mask(g.order(), canonical_mask(g)); }

std::vector<Graph> unlabeled_corpus(int max_n, bool connected_only) {
    if (max_n > 6) throw CapacityError("isomorphism-reduced corpus is limited to 6 vertices");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::set<std::uint64_t> classes;
        for_each_labeled_graph(n, connected_only, [&](const Graph& g) {
            classes.insert(canonical_mask(g));
            return true;
        });
        for (std::uint64_t mask : classes) out.push_back(graph_from_mask(n, mask));
    }
    return out;
}

std::optional<std::pair<int, int>> match_h_family(const Graph& g) {
    const int order = g.order();
    for (int n = 1; n + 1 <= order; ++n) {
        if (order % (n + 1) != 0) continue;
        const int k = order / (n + 1);
        if (k == 1) {
            if (g.is_complete()) return std::pair{1, n};
            continue;
        }
        VertexSet z;
        for (Vertex v = 0; v < order; ++v)
            if (g.degree(v) == n) z.insert(v);
        const VertexSet a = g.vertices() - z;
        if (z.size() != k || !g.is_independent(z) || !g.is_clique(a)) continue;
        VertexSet covered;
        bool ok = true;
        for (Vertex v : z) {
            if (g.neighbors(v).intersects(covered)) ok = false;
            covered |= g.neighbors(v);
        }
        if (ok && covered == a) return std::pair{k, n};
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> match_balanced_multipartite(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    int r = -1;
    VertexSet seen;
    int parts = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet part = g.vertices() - g.neighbors(v);
        if (r == -1) r = part.size();
        if (part.size() != r || !g.is_independent(part)) return std::nullopt;
        for (Vertex u : part)
            if (g.vertices() - g.neighbors(u) != part) return std::nullopt;
        if (!part.intersects(seen)) {
            ++parts;
            seen |= part;
        }
    }
    return std::pair{parts, r};
}

}  // namespace wcprod
