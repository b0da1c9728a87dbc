// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "wcprod/families.hpp"
#include "wcprod/harness.hpp"
#include "wcprod/independence.hpp"
#include "wcprod/kn_analysis.hpp"
#include "wcprod/products.hpp"

using namespace wcprod;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream notes;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes << "\n    failed: " << what;
        }
    }
};

bool product_wc(const Graph& g, const Graph& h) { return is_well_covered(direct_product(g, h).graph()); }

std::string pair_name(const std::string& a, int x, const std::string& b, int y) {
    return a + std::to_string(x) + " x " + b + std::to_string(y);
}

void complete_dichotomy(Outcome& o) {
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= 5; ++m) {
            const auto r = well_covered_report(direct_product(complete_graph(n), complete_graph(m)).graph());
            const KnReport kn = kn_alpha_i(complete_graph(n), m);
            o.expect(r.well_covered == (n == m), pair_name("K", n, "K", m) + " well-covered iff equal orders");
            o.expect(kn.i_value == r.i_number && kn.alpha_value == r.alpha,
                     pair_name("K", n, "K", m) + " partition engine agrees");
        }
}

void h_family_products(Outcome& o) {
    const std::pair<int, int> cases[] = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}};
    for (auto [k, n] : cases) {
        const Graph h = h_family(k, n);
        const auto r = well_covered_report(direct_product(h, complete_graph(n + 1)).graph());
        const KnReport kn = kn_alpha_i(h, n + 1);
        const std::string name = "H(" + std::to_string(k) + "," + std::to_string(n) + ") x K" + std::to_string(n + 1);
        o.expect(r.well_covered, name + " well-covered");
        o.expect(kn.i_value == kn.alpha_value, name + " partition engine says well-covered");
        if (k == 4 && n == 2) {
            o.expect(r.i_number == 12 && r.alpha == 12, name + " has i = alpha = 12");
            o.expect(kn.i_value == 12 && kn.alpha_value == 12, name + " partition engine gives 12");
        }
    }
}

void multipartite_products(Outcome& o) {
    for (int r = 2; r <= 3; ++r)
        o.expect(product_wc(complete_graph(3), complete_multipartite({r, r, r})),
                 "K3 x K_{r,r,r} well-covered for r=" + std::to_string(r));
    for (int r = 1; r <= 2; ++r) {
        const Graph g = complete_multipartite({r, r, r});
        const Graph p = direct_product(g, g).graph();
        bool all_sized = true;
        std::int64_t count = 0;
        for_each_maximal_independent_set(p, [&](VertexSet s) {
            ++count;
            all_sized = all_sized && s.size() == 3 * r * r;
            return true;
        });
        o.expect(count > 0 && all_sized, "every maximal independent set of K_{r,r,r}^2 has size 3r^2 for r=" +
                                             std::to_string(r));
        o.expect(is_well_covered(p), "K_{r,r,r} x K_{r,r,r} well-covered for r=" + std::to_string(r));
    }
}

void cycle_products(Outcome& o) {
    std::ostringstream table;
    table << "\n    C_m x C_n well-covered (rows m, columns n = 3..7):";
    bool wc[8][8] = {};
    for (int m = 3; m <= 7; ++m) {
        table << "\n      C" << m << ":";
        for (int n = 3; n <= 7; ++n) {
            const auto r = well_covered_report(direct_product(cycle_graph(m), cycle_graph(n)).graph());
            wc[m][n] = r.well_covered;
            table << ' ' << (r.well_covered ? 'Y' : '.');
            const bool vwc_factor = is_very_well_covered(cycle_graph(m)) || is_very_well_covered(cycle_graph(n));
            if (vwc_factor) {
                const bool both = is_very_well_covered(cycle_graph(m)) && is_very_well_covered(cycle_graph(n));
                o.expect(r.well_covered == r.very_well_covered && r.very_well_covered == both,
                         pair_name("C", m, "C", n) + " consistent with the very well-covered product theorem");
            }
        }
    }
    for (int m = 3; m <= 7; ++m)
        for (int n = 3; n <= 7; ++n) o.expect(wc[m][n] == wc[n][m], "table symmetric");
    o.expect(wc[3][3], "C3 x C3 well-covered");
    o.expect(wc[4][4], "C4 x C4 well-covered");
    o.expect(!wc[5][5], "C5 x C5 not well-covered");
    o.expect(!wc[7][7], "C7 x C7 not well-covered");
    // Oracle cross-check on the pairs small enough for the subset filter.
    for (int m = 3; m <= 4; ++m)
        for (int n = 3; n <= 5; ++n)
            o.expect(oracle::well_covered(oracle::product(cycle_graph(m), cycle_graph(n))) == wc[m][n],
                     pair_name("C", m, "C", n) + " matches the subset oracle");
    o.notes << table.str();
}

void theorem_suite(Outcome& o) {
    const SuiteCorpusConfig config;
    const auto instances = standard_instances(config);
    SuiteOptions options;
    options.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    const SuiteReport report = run_suite(ClaimRegistry::standard(), {}, instances, options);
    o.expect(report.counterexample_count() == 0, "zero counterexamples");
    for (const auto& id : report.order) {
        const ClaimTally& t = report.tallies.at(id);
        o.expect(t.holds > 0, id + " has at least one non-vacuous pass");
        for (const auto& v : t.counterexamples) o.notes << "\n    " << to_json(v).dump();
    }
    o.notes << "\n    " << report.instances << " instances";
    for (const auto& id : report.order) {
        const ClaimTally& t = report.tallies.at(id);
        o.notes << "\n    " << id << ": holds " << t.holds << ", vacuous " << t.vacuous << ", counterexamples "
                << t.counterexamples.size();
    }
}

void oracle_equivalence(Outcome& o) {
    std::int64_t graphs = 0, sets = 0;
    bool values_ok = true, round_trip_ok = true;
    for_each_corpus_graph(6, false, [&](const Graph& g) {
        ++graphs;
        for (int n = 2; n <= 3; ++n) {
            const ProductGraph p(g, complete_graph(n));
            int lo = 1000, hi = -1;
            for_each_maximal_independent_set(p.graph(), [&](VertexSet s) {
                ++sets;
                lo = std::min(lo, s.size());
                hi = std::max(hi, s.size());
                const WeakPartition w = partition_from_mis(g, n, s);
                if (!w.valid() || mis_from_partition(w) != s || partition_weight(w) != s.size() ||
                    partition_from_mis(g, n, mis_from_partition(w)) != w)
                    round_trip_ok = false;
                return true;
            });
            const KnReport kn = kn_alpha_i(g, n);
            if (kn.engine != "partition" || kn.i_value != lo || kn.alpha_value != hi) values_ok = false;
        }
        return true;
    });
    o.expect(values_ok, "kn_alpha_i matches the materialised product on every graph");
    o.expect(round_trip_ok, "partition/MIS round trip on every maximal independent set");
    o.notes << "\n    " << graphs << " graphs, " << sets << " maximal independent sets";
}

void enumeration_correctness(Outcome& o) {
    std::vector<Graph> graphs;
    std::mt19937_64 rng(20240601);
    for (int k = 0; k < 200; ++k) graphs.push_back(oracle::random_graph(rng, 1, 7));
    for (int n = 1; n <= 7; ++n) {
        graphs.push_back(complete_graph(n));
        graphs.push_back(path_graph(n));
        graphs.push_back(Graph::empty(n));
    }
    for (int n = 3; n <= 12; ++n) graphs.push_back(cycle_graph(n));
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; k * (n + 1) <= 16; ++n) graphs.push_back(h_family(k, n));
    for (int k = 1; k <= 8; ++k) graphs.push_back(corona(k));
    for (const auto& parts : std::vector<std::vector<int>>{{2, 2, 2}, {3, 3, 3}, {3, 3}, {1, 3}, {2, 2}, {1, 1, 1, 1}})
        graphs.push_back(complete_multipartite(parts));

    for (const auto& g : graphs) {
        const auto expected = static_cast<std::int64_t>(oracle::maximal_sets(g).size());
        o.expect(count_maximal_independent_sets(g) == expected,
                 "maximal independent set count for a graph on " + std::to_string(g.order()) + " vertices");
    }
    o.notes << "\n    " << graphs.size() << " graphs";
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Outcome&)> run;
        double limit_seconds;  // 0: no limit
    };
    const Criterion criteria[] = {
        {"1 complete-graph dichotomy", complete_dichotomy, 10},
        {"2 H-family products", h_family_products, 60},
        {"3 multipartite products", multipartite_products, 60},
        {"4 cycle products", cycle_products, 120},
        {"5 theorem suite", theorem_suite, 1800},
        {"6 oracle equivalence", oracle_equivalence, 0},
        {"7 enumeration correctness", enumeration_correctness, 0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0) o.expect(seconds < c.limit_seconds, "time limit " + std::to_string(c.limit_seconds) + "s");
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.name << "  (" << timing << ")" << o.notes.str()
                  << '\n';
        failures += !o.ok;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
