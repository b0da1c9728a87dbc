#pragma once

// Brute-force reference implementations. They only touch Graph::order and
// Graph::has_edge, so they stay independent of the algorithms under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "wcprod/graph.hpp"

namespace oracle {

using wcprod::Graph;
using wcprod::Vertex;
using Mask = std::uint64_t;

inline bool in(Mask m, int v) { return (m >> v) & 1U; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }

inline bool independent(const Graph& g, Mask s) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (in(s, u) && in(s, v) && g.has_edge(u, v)) return false;
    return true;
}

// Every vertex of `domain` outside S has a neighbour in S.
inline bool dominates(const Graph& g, Mask s, Mask domain) {
    for (int v = 0; v < g.order(); ++v) {
        if (!in(domain, v) || in(s, v)) continue;
        bool hit = false;
        for (int u = 0; u < g.order() && !hit; ++u) hit = in(s, u) && g.has_edge(u, v);
        if (!hit) return false;
    }
    return true;
}

inline Mask all(const Graph& g) { return g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1; }

// Maximal independent sets of G[domain] by filtering every subset.
inline std::vector<Mask> maximal_sets(const Graph& g, Mask domain) {
    std::vector<Mask> out;
    const int n = g.order();
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if ((s & ~domain) != 0) continue;
        if (independent(g, s) && dominates(g, s, domain)) out.push_back(s);
    }
    return out;
}
inline std::vector<Mask> maximal_sets(const Graph& g) { return maximal_sets(g, all(g)); }

struct AlphaI {
    int alpha = 0;
    int i = 0;
};

inline AlphaI alpha_i(const Graph& g, Mask domain) {
    AlphaI r{0, 64};
    for (Mask s : maximal_sets(g, domain)) {
        r.alpha = std::max(r.alpha, popcount(s));
        r.i = std::min(r.i, popcount(s));
    }
    return r;
}
inline AlphaI alpha_i(const Graph& g) { return alpha_i(g, all(g)); }

inline bool well_covered(const Graph& g) {
    auto r = alpha_i(g);
    return r.alpha == r.i;
}

inline bool isolated_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        bool has = false;
        for (int u = 0; u < g.order(); ++u) has = has || g.has_edge(u, v);
        if (!has) return false;
    }
    return true;
}

inline bool very_well_covered(const Graph& g) {
    return well_covered(g) && isolated_free(g) && 2 * alpha_i(g).alpha == g.order();
}

// The product straight from the definition, with index g * n(H) + h.
inline Graph product(const Graph& g, const Graph& h) {
    std::vector<wcprod::Edge> edges;
    const int nh = h.order();
    for (int g1 = 0; g1 < g.order(); ++g1)
        for (int g2 = 0; g2 < g.order(); ++g2)
            for (int h1 = 0; h1 < nh; ++h1)
                for (int h2 = 0; h2 < nh; ++h2)
                    if (g.has_edge(g1, g2) && h.has_edge(h1, h2) && g1 * nh + h1 < g2 * nh + h2)
                        edges.emplace_back(g1 * nh + h1, g2 * nh + h2);
    return Graph::from_edge_list(g.order() * nh, edges);
}

inline Mask closed_nbhd(const Graph& g, Mask s) {
    Mask out = s;
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (in(s, u) && g.has_edge(u, v)) out |= Mask{1} << v;
    return out;
}

// x is isolatable when an independent I avoiding N[x] leaves x with no
// neighbour in G - N[I].
inline Mask isolatable(const Graph& g) {
    Mask out = 0;
    const int n = g.order();
    for (int x = 0; x < n; ++x) {
        const Mask nx = closed_nbhd(g, Mask{1} << x);
        for (Mask s = 0; s < (Mask{1} << n); ++s) {
            if ((s & nx) != 0 || !independent(g, s)) continue;
            const Mask rest = all(g) & ~closed_nbhd(g, s);
            bool isolated = true;
            for (int u = 0; u < n; ++u) isolated = isolated && !(in(rest, u) && g.has_edge(x, u));
            if (isolated) {
                out |= Mask{1} << x;
                break;
            }
        }
    }
    return out;
}

inline bool has_berge_violation(const Graph& g) {
    for (Mask s = 1; s < (Mask{1} << g.order()); ++s) {
        if (!independent(g, s)) continue;
        const Mask nbrs = closed_nbhd(g, s) & ~s;
        if (popcount(s) > popcount(nbrs)) return true;
    }
    return false;
}

inline int component_count(const Graph& g) {
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) parent[find(u)] = find(v);
    int count = 0;
    for (int v = 0; v < g.order(); ++v) count += find(v) == v;
    return count;
}

// Shortest cycle by extending simple paths from their smallest vertex; 0 for forests.
inline int girth(const Graph& g) {
    const int n = g.order();
    int best = 0;
    std::vector<int> path;
    auto extend = [&](auto&& self, Mask used) -> void {
        const int len = static_cast<int>(path.size());
        if (best != 0 && len >= best) return;
        const int last = path.back();
        if (len >= 3 && g.has_edge(last, path.front())) best = len;
        for (int v = path.front() + 1; v < n; ++v) {
            if (in(used, v) || !g.has_edge(last, v)) continue;
            path.push_back(v);
            self(self, used | Mask{1} << v);
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        extend(extend, Mask{1} << s);
    }
    return best;
}

inline int perfect_matching_count(const Graph& g) {
    auto rec = [&](auto&& self, Mask left) -> int {
        if (left == 0) return 1;
        const int u = __builtin_ctzll(left);
        int total = 0;
        for (int v = u + 1; v < g.order(); ++v)
            if (in(left, v) && g.has_edge(u, v)) total += self(self, left & ~(Mask{1} << u) & ~(Mask{1} << v));
        return total;
    };
    return rec(rec, all(g));
}

// Conditions 1-4 of a weak partition, straight from the definition.
inline bool partition_valid(const Graph& g, int n, const std::vector<int>& label) {
    const int v = g.order();
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b) {
            if (!g.has_edge(a, b)) continue;
            const int la = label[a], lb = label[b];
            if (la >= 1 && la <= n && lb != 0 && lb != la) return false;  // 1
            if (la == n + 1 && lb == n + 1) return false;                 // 3
        }
    for (int a = 0; a < v; ++a) {
        const int la = label[a];
        if (la >= 1 && la <= n) {  // 2
            bool partner = false;
            for (int b = 0; b < v; ++b) partner = partner || (g.has_edge(a, b) && label[b] == la);
            if (!partner) return false;
        }
        if (la == 0) {  // 4
            bool bracket = false;
            std::vector<bool> seen(n + 2, false);
            int distinct = 0;
            for (int b = 0; b < v; ++b) {
                if (!g.has_edge(a, b)) continue;
                if (label[b] == n + 1) bracket = true;
                if (label[b] >= 1 && label[b] <= n && !seen[label[b]]) {
                    seen[label[b]] = true;
                    ++distinct;
                }
            }
            if (!bracket && distinct < 2) return false;
        }
    }
    return true;
}

// Multiset of weights over every valid labelling (no symmetry reduction).
inline std::map<int, long> partition_weights(const Graph& g, int n) {
    std::map<int, long> out;
    std::vector<int> label(g.order(), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.order()) {
            if (!partition_valid(g, n, label)) return;
            int w = 0;
            for (int l : label) w += (l == n + 1) ? n : (l >= 1 ? 1 : 0);
            ++out[w];
            return;
        }
        for (int l = 0; l <= n + 1; ++l) {
            label[v] = l;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<wcprod::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph random_graph(std::mt19937_64& rng, int min_n, int max_n) {
    std::uniform_int_distribution<int> order(min_n, max_n);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    const int n = order(rng);
    return random_graph(rng, n, density(rng));
}

}  // namespace oracle
