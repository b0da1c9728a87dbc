#include "wcprod/kn_analysis.hpp"

#include <algorithm>
#include <limits>

#include "wcprod/errors.hpp"
#include "wcprod/families.hpp"
#include "wcprod/graph_io.hpp"
#include "wcprod/independence.hpp"

namespace wcprod {

namespace {

void require_clique_order(int n) {
    if (n < 2) throw GraphError("clique order must be at least 2, got " + std::to_string(n));
}

// Conditions 2 and 4 for one vertex whose neighbours are all labelled.
// `parts[l]` holds the vertices labelled l.
bool locally_valid(const Graph& g, int n, Vertex u, int label, std::span<const VertexSet> parts) {
    const VertexSet nbrs = g.neighbors(u);
    if (label >= 1 && label <= n) return nbrs.intersects(parts[label]);
    if (label == 0) {
        if (nbrs.intersects(parts[n + 1])) return true;
        int touched = 0;
        for (int k = 1; k <= n && touched < 2; ++k)
            if (nbrs.intersects(parts[k])) ++touched;
        return touched >= 2;
    }
    return true;
}

class PartitionSearch {
public:
    using Visit = std::function<bool(std::span<const int>, int)>;

    PartitionSearch(const Graph& g, int n, bool reduce_symmetry, std::uint64_t budget, const Visit& visit)
        : g_(g), n_(n), reduce_(reduce_symmetry), budget_(budget), visit_(visit),
          labels_(g.order(), -1), parts_(n + 2), closes_(g.order()) {
        for (Vertex u = 0; u < g.order(); ++u) {
            VertexSet closed = g.neighbors(u) | VertexSet::single(u);
            Vertex last = 63 - std::countl_zero(closed.bits());
            closes_[last].push_back(u);
        }
    }

    std::optional<std::uint64_t> run() {
        descend(0, 0, 0);
        if (aborted_) return std::nullopt;
        return nodes_;
    }

private:
    void descend(Vertex v, int opened, int weight) {
        if (stopped_) return;
        if (++nodes_ > budget_) {
            aborted_ = stopped_ = true;
            return;
        }
        if (v == g_.order()) {
            if (!visit_(labels_, weight)) stopped_ = true;
            return;
        }
        const VertexSet nbrs = g_.neighbors(v);
        const VertexSet nonzero = assigned_ - parts_[0];
        const int top = reduce_ ? std::min(n_, opened + 1) : n_;
        for (int label = 0; label <= n_ + 1 && !stopped_; ++label) {
            if (label > top && label <= n_) continue;
            if (label == n_ + 1 && nbrs.intersects(nonzero)) continue;            // conditions 1 and 3
            if (label >= 1 && label <= n_ && nbrs.intersects(nonzero - parts_[label])) continue;  // condition 1
            labels_[v] = label;
            parts_[label].insert(v);
            assigned_.insert(v);
            bool ok = true;
            for (Vertex u : closes_[v]) {
                if (!locally_valid(g_, n_, u, labels_[u], parts_)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                int gain = label == 0 ? 0 : (label == n_ + 1 ? n_ : 1);
                descend(v + 1, std::max(opened, label <= n_ ? label : 0), weight + gain);
            }
            assigned_.erase(v);
            parts_[label].erase(v);
            labels_[v] = -1;
        }
    }

    const Graph& g_;
    int n_;
    bool reduce_;
    std::uint64_t budget_;
    const Visit& visit_;
    std::vector<int> labels_;
    std::vector<VertexSet> parts_;
    std::vector<std::vector<Vertex>> closes_;
    VertexSet assigned_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool stopped_ = false;
};

}  // namespace

WeakPartition::WeakPartition(Graph g, int n, std::vector<int> labels)
    : graph_(std::move(g)), n_(n), labels_(std::move(labels)) {
    require_clique_order(n_);
    if (static_cast<int>(labels_.size()) != graph_.order())
        throw GraphError("weak partition needs one label per vertex");
    for (int label : labels_)
        if (label < 0 || label > n_ + 1) throw GraphError("weak partition label out of range");
}

WeakPartition WeakPartition::from_parts(Graph g, VertexSet v0, const std::vector<VertexSet>& classes,
                                        VertexSet bracket) {
    const int n = static_cast<int>(classes.size());
    std::vector<int> labels(g.order(), -1);
    auto place = [&](VertexSet part, int label) {
        for (Vertex v : part) {
            if (v >= g.order()) throw GraphError("weak partition part has a vertex outside the graph");
            if (labels[v] != -1) throw GraphError("weak partition parts overlap at vertex " + std::to_string(v));
            labels[v] = label;
        }
    };
    place(v0, 0);
    for (int k = 0; k < n; ++k) place(classes[k], k + 1);
    place(bracket, n + 1);
    if (std::find(labels.begin(), labels.end(), -1) != labels.end())
        throw GraphError("weak partition parts do not cover every vertex");
    return WeakPartition(std::move(g), n, std::move(labels));
}

VertexSet WeakPartition::part(int label) const noexcept {
    VertexSet out;
    for (Vertex v = 0; v < graph_.order(); ++v)
        if (labels_[v] == label) out.insert(v);
    return out;
}

std::array<bool, 4> WeakPartition::conditions() const {
    std::vector<VertexSet> parts(n_ + 2);
    for (Vertex v = 0; v < graph_.order(); ++v) parts[labels_[v]].insert(v);
    std::array<bool, 4> ok{true, true, true, true};
    for (int k = 1; k <= n_; ++k) {
        VertexSet outside = graph_.vertices() - parts[0] - parts[k];
        if (graph_.neighborhood(parts[k]).intersects(outside)) ok[0] = false;
        for (Vertex u : parts[k])
            if (!graph_.neighbors(u).intersects(parts[k])) ok[1] = false;
    }
    ok[2] = graph_.is_independent(parts[n_ + 1]);
    for (Vertex u : parts[0])
        if (!locally_valid(graph_, n_, u, 0, parts)) ok[3] = false;
    return ok;
}

std::optional<int> WeakPartition::violated_condition() const {
    auto ok = conditions();
    for (int c = 0; c < 4; ++c)
        if (!ok[c]) return c + 1;
    return std::nullopt;
}

int partition_weight(const WeakPartition& p) {
    if (auto bad = p.violated_condition())
        throw GraphError("weak partition violates condition " + std::to_string(*bad));
    int weight = 0;
    for (int label : p.labels()) weight += label == 0 ? 0 : (label == p.clique_order() + 1 ? p.clique_order() : 1);
    return weight;
}

VertexSet mis_from_partition(const WeakPartition& p) {
    const int n = p.clique_order();
    VertexSet out;
    for (Vertex g = 0; g < p.graph().order(); ++g) {
        const int label = p.labels()[g];
        if (label == n + 1)
            out |= VertexSet(VertexSet::full(n).bits() << (g * n));
        else if (label >= 1)
            out.insert(g * n + label - 1);
    }
    return out;
}

WeakPartition partition_from_mis(const Graph& g, int n, VertexSet i) {
    require_clique_order(n);
    const ProductGraph product(g, complete_graph(n));
    if (!product.graph().is_maximal_independent(i))
        throw GraphError("set is not a maximal independent set of G x K_" + std::to_string(n));
    std::vector<int> labels(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet meet = i & product.layer_h(v);
        const int size = meet.size();
        if (size == 0)
            labels[v] = 0;
        else if (size == 1)
            labels[v] = product.coordinates(meet.first()).second + 1;
        else if (size == n)
            labels[v] = n + 1;
        else
            throw GraphError("layer over vertex " + std::to_string(v) + " meets the set in " + std::to_string(size) +
                             " vertices");
    }
    return WeakPartition(g, n, std::move(labels));
}

std::optional<std::uint64_t> for_each_valid_labeling(
    const Graph& g, int n, bool reduce_symmetry, std::uint64_t node_budget,
    const std::function<bool(std::span<const int> labels, int weight)>& visit) {
    require_clique_order(n);
    return PartitionSearch(g, n, reduce_symmetry, node_budget, visit).run();
}

std::vector<WeakPartition> valid_weak_partitions(const Graph& g, int n, bool reduce_symmetry) {
    std::vector<WeakPartition> out;
    for_each_valid_labeling(g, n, reduce_symmetry, std::numeric_limits<std::uint64_t>::max(),
                            [&](std::span<const int> labels, int) {
                                out.emplace_back(g, n, std::vector<int>(labels.begin(), labels.end()));
                                return true;
                            });
    return out;
}

KnReport kn_alpha_i(const Graph& g, int n, std::uint64_t node_budget) {
    require_clique_order(n);
    KnReport report;
    report.n = n;
    std::vector<int> min_labels, max_labels;
    int lo = std::numeric_limits<int>::max();
    int hi = -1;
    auto nodes = for_each_valid_labeling(g, n, true, node_budget, [&](std::span<const int> labels, int weight) {
        if (weight < lo) {
            lo = weight;
            min_labels.assign(labels.begin(), labels.end());
        }
        if (weight > hi) {
            hi = weight;
            max_labels.assign(labels.begin(), labels.end());
        }
        return true;
    });
    if (nodes) {
        report.engine = "partition";
        report.nodes = *nodes;
        report.i_value = lo;
        report.alpha_value = hi;
        report.argmin.emplace(g, n, std::move(min_labels));
        report.argmax.emplace(g, n, std::move(max_labels));
        return report;
    }
    const ProductGraph product(g, complete_graph(n));
    const WellCoveredReport brute = well_covered_report(product.graph());
    report.engine = "brute_force";
    report.nodes = node_budget;
    report.i_value = brute.i_number;
    report.alpha_value = brute.alpha;
    report.argmin = partition_from_mis(g, n, brute.witness_min);
    report.argmax = partition_from_mis(g, n, brute.witness_max);
    return report;
}

ClaimVerdict layer_cardinality_check(const Graph& g, int n) {
    require_clique_order(n);
    ClaimVerdict verdict;
    verdict.claim_id = "layer_sizes";
    verdict.instance = to_graph6(g) + " x K" + std::to_string(n);
    const ProductGraph product(g, complete_graph(n));
    std::int64_t checked = 0;
    for_each_maximal_independent_set(product.graph(), [&](VertexSet mis) {
        ++checked;
        for (Vertex v = 0; v < g.order(); ++v) {
            const int size = (mis & product.layer_h(v)).size();
            if (size != 0 && size != 1 && size != n) {
                verdict.status = ClaimStatus::counterexample;
                verdict.witness = {{"mis", mis.to_vector()}, {"vertex", v}, {"layer_meet", size}};
                return false;
            }
        }
        return true;
    });
    if (!verdict.counterexample()) verdict.witness = {{"maximal_independent_sets", checked}};
    return verdict;
}

ClaimVerdict necessary_condition_check(const Graph& g, int n) {
    require_clique_order(n);
    ClaimVerdict verdict;
    verdict.claim_id = "kn_necessary";
    verdict.instance = to_graph6(g) + " x K" + std::to_string(n);
    const ProductGraph product(g, complete_graph(n));
    if (!is_well_covered(product.graph())) {
        verdict.status = ClaimStatus::vacuous;
        verdict.witness = {{"failed_hypothesis", "product is not well-covered"}};
        return verdict;
    }
    int high_degree = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (g.degree(x) < n) continue;
        ++high_degree;
        const VertexSet rest = g.vertices() - g.closed_neighborhood(VertexSet::single(x));
        if (g.isolated_vertices(rest).empty()) {
            verdict.status = ClaimStatus::counterexample;
            verdict.witness = {{"x", x}, {"degree", g.degree(x)}, {"residual", rest.to_vector()}};
            return verdict;
        }
    }
    verdict.witness = {{"vertices_of_degree_at_least_n", high_degree}};
    return verdict;
}

ClaimVerdict bipartite_isolation_check(const Graph& b) {
    ClaimVerdict verdict;
    verdict.claim_id = "bipartite_isolation";
    verdict.instance = to_graph6(b);
    const char* failed = nullptr;
    if (b.order() == 0 || b.min_degree() < 2)
        failed = "minimum degree below 2";
    else if (!b.is_bipartite())
        failed = "not bipartite";
    else if (!is_well_covered(b))
        failed = "not well-covered";
    if (failed) {
        verdict.status = ClaimStatus::vacuous;
        verdict.witness = {{"failed_hypothesis", failed}};
        return verdict;
    }
    for (Vertex x = 0; x < b.order(); ++x) {
        const VertexSet rest = b.vertices() - b.closed_neighborhood(VertexSet::single(x));
        if (b.isolated_vertices(rest).empty()) {
            verdict.status = ClaimStatus::counterexample;
            verdict.witness = {{"x", x}, {"residual", rest.to_vector()}};
            return verdict;
        }
    }
    return verdict;
}

}  // namespace wcprod
