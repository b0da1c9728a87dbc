#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wcprod/graph.hpp"
#include "wcprod/verdict.hpp"

namespace wcprod {

/// Independence profile of a graph.
///
/// Invariants: i_number <= alpha; well_covered iff i_number == alpha;
/// very_well_covered implies well_covered, 2 * alpha == n and no isolated
/// vertices; both witnesses are maximal independent sets of the stated sizes.
struct WellCoveredReport {
    int n = 0;
    int alpha = 0;
    int i_number = 0;
    bool well_covered = true;
    bool very_well_covered = true;
    VertexSet witness_min;
    VertexSet witness_max;
};

/// A matching, stored both as an edge list and as a partner map
/// (partner[v] == -1 when v is unmatched).
class Matching {
public:
    Matching(int n, std::vector<Edge> edges);

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    Vertex partner(Vertex v) const noexcept { return partner_[v]; }
    bool is_perfect() const noexcept;

private:
    std::vector<Edge> edges_;
    std::vector<Vertex> partner_;
};

namespace detail {

// Pivoted Bron-Kerbosch on the complement graph. `candidates` are uncovered
// vertices that may still join the set, `excluded` uncovered vertices that
// were already branched on. Every maximal independent set of the starting
// domain is reached exactly once.
template <class Visit>
bool enumerate_mis(const Graph& g, VertexSet current, VertexSet candidates, VertexSet excluded, Visit& visit) {
    if (candidates.empty()) return excluded.empty() ? visit(current) : true;
    Vertex pivot = -1;
    int fewest = kMaxVertices + 1;
    for (Vertex u : candidates | excluded) {
        int branches = (g.closed_neighborhood(VertexSet::single(u)) & candidates).size();
        if (branches < fewest) {
            fewest = branches;
            pivot = u;
            if (branches <= 1) break;
        }
    }
    if (fewest == 0) return true;  // the pivot can no longer be dominated
    VertexSet branch = (g.neighbors(pivot) | VertexSet::single(pivot)) & candidates;
    for (Vertex w : branch) {
        VertexSet closed = g.neighbors(w) | VertexSet::single(w);
        if (!enumerate_mis(g, current | VertexSet::single(w), candidates - closed, excluded - closed, visit))
            return false;
        candidates.erase(w);
        excluded.insert(w);
    }
    return true;
}

template <class Visit>
bool enumerate_independent(const Graph& g, VertexSet current, VertexSet candidates, Visit& visit) {
    if (!visit(current)) return false;
    while (!candidates.empty()) {
        Vertex w = candidates.first();
        candidates.erase(w);
        if (!enumerate_independent(g, current | VertexSet::single(w), candidates - g.neighbors(w), visit))
            return false;
    }
    return true;
}

}  // namespace detail

/// Calls visit(S) for every inclusion-maximal independent set S of G[within]
/// exactly once. `visit` returns false to stop early. The empty domain yields
/// the single empty set.
template <class Visit>
void for_each_maximal_independent_set(const Graph& g, VertexSet within, Visit&& visit) {
    detail::enumerate_mis(g, VertexSet{}, within & g.vertices(), VertexSet{}, visit);
}

template <class Visit>
void for_each_maximal_independent_set(const Graph& g, Visit&& visit) {
    for_each_maximal_independent_set(g, g.vertices(), std::forward<Visit>(visit));
}

/// Calls visit(S) for every independent subset S of `within` (including the
/// empty set), in a fixed depth-first order. `visit` returns false to stop.
template <class Visit>
void for_each_independent_set(const Graph& g, VertexSet within, Visit&& visit) {
    detail::enumerate_independent(g, VertexSet{}, within & g.vertices(), visit);
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g);
std::int64_t count_maximal_independent_sets(const Graph& g);

/// Size of a largest independent set of G[within] (branch and bound).
int alpha(const Graph& g, VertexSet within);
inline int alpha(const Graph& g) { return alpha(g, g.vertices()); }

/// Size of a smallest maximal independent set of G[within] (branch and bound).
int i_number(const Graph& g, VertexSet within);
inline int i_number(const Graph& g) { return i_number(g, g.vertices()); }

/// One enumeration pass computing alpha, i and witnesses.
WellCoveredReport well_covered_report(const Graph& g);

/// Whether G[within] is well-covered. Stops enumerating as soon as two
/// maximal independent sets of different sizes have been seen.
bool is_well_covered(const Graph& g, VertexSet within);
inline bool is_well_covered(const Graph& g) { return is_well_covered(g, g.vertices()); }

bool is_very_well_covered(const Graph& g);

/// Vertices x for which some independent I inside V - N[x] leaves x with
/// degree 0 in G - N[I]. Degree-0 vertices qualify through I = ∅.
VertexSet isolatable_vertices(const Graph& g);
/// An independent set isolating x, if one exists.
std::optional<VertexSet> isolating_set(const Graph& g, Vertex x);

/// Some independent S with |S| > |N(S)|, if any.
std::optional<VertexSet> berge_violation(const Graph& g);

/// All perfect matchings, built by pairing the lowest unmatched vertex first.
std::vector<Matching> perfect_matchings(const Graph& g);

/// A pair (x, y) violating Property (P) for M, if any.
/// Throws GraphError when M is not a perfect matching of G.
std::optional<Edge> property_p_violation(const Graph& g, const Matching& m);
bool has_property_p(const Graph& g, const Matching& m);

/// Evaluates the three equivalent conditions characterising very
/// well-covered graphs: (i) very well-covered, (ii) some perfect matching has
/// Property (P), (iii) a perfect matching exists and all of them have it.
/// Holds when all three agree.
ClaimVerdict favaron_equivalence_verdict(const Graph& g);

}  // namespace wcprod
