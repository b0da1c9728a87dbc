#include "wcprod/independence.hpp"

#include <algorithm>
#include <functional>

#include "wcprod/errors.hpp"
#include "wcprod/graph_io.hpp"

namespace wcprod {

Matching::Matching(int n, std::vector<Edge> edges) : edges_(std::move(edges)), partner_(n, -1) {
    for (auto [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw GraphError("matching edge out of range");
        if (partner_[u] != -1 || partner_[v] != -1) throw GraphError("matching edges are not disjoint");
        partner_[u] = v;
        partner_[v] = u;
    }
}

bool Matching::is_perfect() const noexcept {
    return std::none_of(partner_.begin(), partner_.end(), [](Vertex p) { return p == -1; });
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::int64_t count_maximal_independent_sets(const Graph& g) {
    std::int64_t count = 0;
    for_each_maximal_independent_set(g, [&](VertexSet) {
        ++count;
        return true;
    });
    return count;
}

namespace {

// Greedy partition of `rest` into cliques; the number of cliques bounds the
// independence number of G[rest] from above.
int clique_cover_bound(const Graph& g, VertexSet rest) {
    int cliques = 0;
    while (!rest.empty()) {
        Vertex v = rest.first();
        VertexSet common = g.neighbors(v) & rest;
        rest.erase(v);
        while (!common.empty()) {
            Vertex u = common.first();
            common &= g.neighbors(u);
            rest.erase(u);
        }
        ++cliques;
    }
    return cliques;
}

class MaxIndependentSearch {
public:
    explicit MaxIndependentSearch(const Graph& g) : g_(g) {}

    int run(VertexSet within) {
        best_ = 0;
        search(within, 0);
        return best_;
    }

private:
    void search(VertexSet candidates, int size) {
        if (candidates.empty()) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + candidates.size() <= best_) return;
        if (size + clique_cover_bound(g_, candidates) <= best_) return;
        Vertex widest = -1;
        int widest_degree = -1;
        for (Vertex v : candidates) {
            int d = (g_.neighbors(v) & candidates).size();
            if (d <= 1) {
                // A vertex of degree <= 1 belongs to some maximum independent set.
                search(candidates - g_.neighbors(v) - VertexSet::single(v), size + 1);
                return;
            }
            if (d > widest_degree) {
                widest_degree = d;
                widest = v;
            }
        }
        search(candidates - g_.neighbors(widest) - VertexSet::single(widest), size + 1);
        search(candidates - VertexSet::single(widest), size);
    }

    const Graph& g_;
    int best_ = 0;
};

class MinMaximalIndependentSearch {
public:
    explicit MinMaximalIndependentSearch(const Graph& g) : g_(g) {}

    int run(VertexSet within) {
        best_ = within.size() + 1;
        search(0, within, VertexSet{});
        return best_;
    }

private:
    void search(int size, VertexSet candidates, VertexSet excluded) {
        VertexSet uncovered = candidates | excluded;
        if (uncovered.empty()) {
            best_ = std::min(best_, size);
            return;
        }
        if (candidates.empty() || size + 1 >= best_) return;
        int widest_cover = 0;
        Vertex pivot = -1;
        int fewest = kMaxVertices + 1;
        for (Vertex u : uncovered) {
            VertexSet closed = g_.neighbors(u) | VertexSet::single(u);
            if (candidates.contains(u)) widest_cover = std::max(widest_cover, (closed & uncovered).size());
            int branches = (closed & candidates).size();
            if (branches < fewest) {
                fewest = branches;
                pivot = u;
            }
        }
        if (fewest == 0) return;
        if (widest_cover > 0) {
            int needed = (uncovered.size() + widest_cover - 1) / widest_cover;
            if (size + needed >= best_) return;
        }
        VertexSet branch = (g_.neighbors(pivot) | VertexSet::single(pivot)) & candidates;
        for (Vertex w : branch) {
            VertexSet closed = g_.neighbors(w) | VertexSet::single(w);
            search(size + 1, candidates - closed, excluded - closed);
            candidates.erase(w);
            excluded.insert(w);
        }
    }

    const Graph& g_;
    int best_ = 0;
};

}  // namespace

int alpha(const Graph& g, VertexSet within) { return MaxIndependentSearch(g).run(within & g.vertices()); }

int i_number(const Graph& g, VertexSet within) { return MinMaximalIndependentSearch(g).run(within & g.vertices()); }

WellCoveredReport well_covered_report(const Graph& g) {
    WellCoveredReport report;
    report.n = g.order();
    bool first = true;
    for_each_maximal_independent_set(g, [&](VertexSet s) {
        const int k = s.size();
        if (first || k < report.i_number) {
            report.i_number = k;
            report.witness_min = s;
        }
        if (first || k > report.alpha) {
            report.alpha = k;
            report.witness_max = s;
        }
        first = false;
        return true;
    });
    report.well_covered = report.i_number == report.alpha;
    report.very_well_covered =
        report.well_covered && g.isolated_vertices().empty() && 2 * report.alpha == report.n;
    return report;
}

bool is_well_covered(const Graph& g, VertexSet within) {
    int seen = -1;
    bool uniform = true;
    for_each_maximal_independent_set(g, within, [&](VertexSet s) {
        if (seen == -1) seen = s.size();
        uniform = seen == s.size();
        return uniform;
    });
    return uniform;
}

bool is_very_well_covered(const Graph& g) {
    return g.isolated_vertices().empty() && 2 * alpha(g) == g.order() && is_well_covered(g);
}

std::optional<VertexSet> isolating_set(const Graph& g, Vertex x) {
    const VertexSet targets = g.neighbors(x);
    const VertexSet allowed = g.vertices() - targets - VertexSet::single(x);
    std::optional<VertexSet> found;
    std::function<bool(VertexSet, VertexSet, VertexSet)> search = [&](VertexSet chosen, VertexSet candidates,
                                                                      VertexSet open) {
        if (open.empty()) {
            found = chosen;
            return true;
        }
        Vertex hardest = -1;
        int fewest = kMaxVertices + 1;
        for (Vertex y : open) {
            int options = (g.neighbors(y) & candidates).size();
            if (options < fewest) {
                fewest = options;
                hardest = y;
            }
        }
        if (fewest == 0) return false;
        for (Vertex w : g.neighbors(hardest) & candidates) {
            if (search(chosen | VertexSet::single(w), candidates - g.neighbors(w) - VertexSet::single(w),
                       open - g.neighbors(w)))
                return true;
            candidates.erase(w);
        }
        return false;
    };
    search(VertexSet{}, allowed, targets);
    return found;
}

VertexSet isolatable_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex x = 0; x < g.order(); ++x)
        if (isolating_set(g, x)) out.insert(x);
    return out;
}

std::optional<VertexSet> berge_violation(const Graph& g) {
    std::optional<VertexSet> found;
    for_each_independent_set(g, g.vertices(), [&](VertexSet s) {
        if (s.size() > g.neighborhood(s).size()) {
            found = s;
            return false;
        }
        return true;
    });
    return found;
}

std::vector<Matching> perfect_matchings(const Graph& g) {
    std::vector<Matching> out;
    if (g.order() % 2 != 0) return out;
    std::vector<Edge> chosen;
    std::function<void(VertexSet)> pair_up = [&](VertexSet unmatched) {
        if (unmatched.empty()) {
            out.emplace_back(g.order(), chosen);
            return;
        }
        Vertex u = unmatched.first();
        VertexSet rest = unmatched - VertexSet::single(u);
        for (Vertex v : g.neighbors(u) & rest) {
            chosen.emplace_back(u, v);
            pair_up(rest - VertexSet::single(v));
            chosen.pop_back();
        }
    };
    pair_up(g.vertices());
    return out;
}

std::optional<Edge> property_p_violation(const Graph& g, const Matching& m) {
    if (!m.is_perfect()) throw GraphError("Property (P) needs a perfect matching");
    for (auto [u, v] : m.edges())
        if (!g.has_edge(u, v)) throw GraphError("matching edge is not an edge of the graph");
    for (Vertex x = 0; x < g.order(); ++x) {
        const Vertex mate = m.partner(x);
        const VertexSet mate_nbrs = g.neighbors(mate);
        for (Vertex y : g.neighbors(x)) {
            if (y == mate) continue;
            if (mate_nbrs.contains(y)) return Edge{x, y};
            for (Vertex z : mate_nbrs)
                if (!g.has_edge(y, z)) return Edge{x, y};
        }
    }
    return std::nullopt;
}

bool has_property_p(const Graph& g, const Matching& m) { return !property_p_violation(g, m).has_value(); }

ClaimVerdict favaron_equivalence_verdict(const Graph& g) {
    const bool vwc = is_very_well_covered(g);
    const auto matchings = perfect_matchings(g);
    bool some_p = false;
    bool all_p = !matchings.empty();
    nlohmann::json failing = nullptr;
    for (const auto& m : matchings) {
        auto bad = property_p_violation(g, m);
        if (bad) {
            all_p = false;
            if (failing.is_null()) failing = {{"matching", m.edges()}, {"x", bad->first}, {"y", bad->second}};
        } else {
            some_p = true;
        }
    }
    ClaimVerdict verdict;
    verdict.claim_id = "favaron";
    verdict.instance = to_graph6(g);
    verdict.witness = {{"very_well_covered", vwc},
                       {"matching_with_p", some_p},
                       {"all_matchings_p", all_p},
                       {"perfect_matchings", matchings.size()}};
    if (!failing.is_null()) verdict.witness["property_p_failure"] = failing;
    verdict.status = (vwc == some_p && some_p == all_p) ? ClaimStatus::holds : ClaimStatus::counterexample;
    return verdict;
}

}  // namespace wcprod
