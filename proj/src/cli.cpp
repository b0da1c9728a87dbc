#include "wcprod/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wcprod/errors.hpp"
#include "wcprod/families.hpp"
#include "wcprod/graph_io.hpp"
#include "wcprod/harness.hpp"
#include "wcprod/independence.hpp"
#include "wcprod/kn_analysis.hpp"
#include "wcprod/products.hpp"
#include "wcprod/serialize.hpp"

namespace wcprod {

using nlohmann::json;

Graph parse_graph_argument(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph argument", 0);
    if (text.front() == '@') return read_graph_file(std::string(text.substr(1)));
    if (text.find(':') != std::string_view::npos) return FamilySpec::parse(text).build();
    return from_graph6(text);
}

namespace {

void flatten(const json& node, const std::string& path, std::string& out) {
    if (node.is_object() && !node.empty()) {
        for (auto it = node.begin(); it != node.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
        return;
    }
    if (node.is_array() && !node.empty() && std::any_of(node.begin(), node.end(), [](const json& e) {
            return e.is_object();
        })) {
        for (std::size_t k = 0; k < node.size(); ++k) flatten(node[k], path + "[" + std::to_string(k) + "]", out);
        return;
    }
    out += path;
    out += ": ";
    out += node.is_string() ? node.get<std::string>() : node.dump();
    out += '\n';
}

// Returns -1 when the graph is not complete (or too small to be K_n, n >= 2).
int clique_order_of(const Graph& g) { return g.order() >= 2 && g.is_complete() ? g.order() : -1; }

struct Options {
    std::string format = "json";
    int jobs = 1;
    std::uint64_t node_budget = kDefaultNodeBudget;
};

class Printer {
public:
    Printer(const Options& options, std::ostream& out) : options_(options), out_(out) {}

    void emit(json doc) {
        if (options_.format == "text") {
            if (!header_done_) out_ << "wcprod " << kVersion << '\n';
            header_done_ = true;
            out_ << render_text(doc);
        } else {
            out_ << doc.dump() << '\n';
        }
    }

private:
    const Options& options_;
    std::ostream& out_;
    bool header_done_ = false;
};

int cmd_analyze(const std::string& input, Printer& printer) {
    const Graph g = parse_graph_argument(input);
    printer.emit({{"input", input},
                  {"graph6", to_graph6(g)},
                  {"report", to_json(well_covered_report(g))},
                  {"structure", structural_facts(g)}});
    return kExitOk;
}

int cmd_product(const std::string& left, const std::string& right, bool check, const Options& options,
                Printer& printer) {
    const Graph g = parse_graph_argument(left);
    const Graph h = parse_graph_argument(right);
    json doc = {{"left", left}, {"right", right}, {"nG", g.order()}, {"nH", h.order()}};
    const int n = clique_order_of(h);
    const bool fits = g.order() * h.order() <= kMaxVertices;
    if (!fits && n < 0)
        throw CapacityError("product has " + std::to_string(g.order() * h.order()) + " vertices; the cap is " +
                            std::to_string(kMaxVertices));
    if (fits) {
        const ProductGraph p(g, h);
        const WellCoveredReport r = well_covered_report(p.graph());
        doc["graph6"] = to_graph6(p.graph());
        doc["report"] = to_json(r);
    }
    if (n >= 0) doc["kn"] = to_json(kn_alpha_i(g, n, options.node_budget));

    int code = kExitOk;
    if (check) {
        if (!fits) throw CapacityError("--check needs the materialised product (at most 64 vertices)");
        json verdicts = json::array();
        for (const char* id : {"wc_direct", "trivial_bounds", "inverse_image", "vwc_product"}) {
            ClaimVerdict v = ClaimRegistry::standard().verify(id, Instance::pair(g, h));
            if (v.counterexample()) code = kExitCounterexample;
            verdicts.push_back(to_json(v));
        }
        doc["checks"] = verdicts;
    }
    printer.emit(std::move(doc));
    return code;
}

int cmd_generate(const std::vector<std::string>& specs, int corpus_n, bool connected, bool classes,
                 Printer& printer) {
    for (const auto& spec : specs) {
        const Graph g = parse_graph_argument(spec);
        printer.emit({{"input", spec}, {"graph6", to_graph6(g)}, {"n", g.order()}, {"edges", g.edges()}});
    }
    if (corpus_n > 0) {
        auto emit = [&](const Graph& g) { printer.emit({{"graph6", to_graph6(g)}, {"n", g.order()}}); };
        if (classes) {
            for (const auto& g : unlabeled_corpus(corpus_n, connected)) emit(g);
        } else {
            for_each_corpus_graph(corpus_n, connected, [&](const Graph& g) {
                emit(g);
                return true;
            });
        }
    }
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& claim_ids, const std::vector<std::string>& inputs, int clique,
               int max_n, const Options& options, Printer& printer) {
    const ClaimRegistry& registry = ClaimRegistry::standard();
    std::vector<Instance> instances;
    if (!inputs.empty()) {
        if (inputs.size() > 2) throw ParseError("verify takes at most two graph arguments", 2);
        const Graph g = parse_graph_argument(inputs[0]);
        if (inputs.size() == 2) {
            instances.push_back(Instance::pair(g, parse_graph_argument(inputs[1])));
        } else if (clique > 0) {
            instances.push_back(Instance::with_clique(g, clique));
        } else {
            instances.push_back(Instance::single(g));
        }
    } else {
        SuiteCorpusConfig config;
        if (max_n > 0) {
            config.single_max_n = std::min(max_n, 7);
            config.pair_max_n = std::min(max_n, 6);
            config.kn_max_n = std::min(max_n, 5);
        }
        instances = standard_instances(config);
    }
    SuiteOptions suite_options;
    suite_options.jobs = options.jobs;
    const SuiteReport report = run_suite(registry, claim_ids, instances, suite_options);
    json doc = report.to_json();
    doc["passed"] = report.passed();
    printer.emit(std::move(doc));
    return report.passed() ? kExitOk : kExitCounterexample;
}

struct ScanRow {
    bool well_covered = false;
    bool very_well_covered = false;
};

int cmd_scan(const std::vector<std::string>& factors, int max_n, bool connected, const std::string& filter,
             const Options& options, Printer& printer) {
    std::vector<Graph> graphs;
    std::vector<std::string> names;
    if (!factors.empty()) {
        for (const auto& f : factors) {
            graphs.push_back(parse_graph_argument(f));
            names.push_back(f);
        }
    } else {
        if (max_n > 6) throw CapacityError("scan over the corpus supports --max-n up to 6");
        for (auto& g : unlabeled_corpus(max_n, connected)) {
            if (connected && g.order() < 2) continue;
            names.push_back(to_graph6(g));
            graphs.push_back(std::move(g));
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < graphs.size(); ++a)
        for (std::size_t b = 0; b < graphs.size(); ++b) {
            if (graphs[a].order() * graphs[b].order() > kMaxVertices) {
                if (!factors.empty())
                    throw CapacityError("product " + names[a] + " x " + names[b] + " exceeds 64 vertices");
                continue;
            }
            pairs.emplace_back(a, b);
        }

    std::vector<ScanRow> rows(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < pairs.size(); k = next++) {
            const Graph p = direct_product(graphs[pairs[k].first], graphs[pairs[k].second]).graph();
            rows[k].well_covered = is_well_covered(p);
            rows[k].very_well_covered = rows[k].well_covered && is_very_well_covered(p);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < std::max(1, options.jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const ScanRow& row = rows[k];
        if (filter == "wc" && !row.well_covered) continue;
        if (filter == "vwc" && !row.very_well_covered) continue;
        if (filter == "wc-not-vwc" && !(row.well_covered && !row.very_well_covered)) continue;
        printer.emit({{"g", names[pairs[k].first]},
                      {"h", names[pairs[k].second]},
                      {"well_covered", row.well_covered},
                      {"very_well_covered", row.very_well_covered}});
    }
    return kExitOk;
}

}  // namespace

std::string render_text(const json& doc) {
    std::string out;
    flatten(doc, "", out);
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Well-covered graphs and direct products", "wcprod"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    Options options;
    app.add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", options.jobs, "Worker threads for verify and scan")->check(CLI::PositiveNumber);
    app.add_option("--node-budget", options.node_budget, "Search node budget for the G x K_n partition engine");

    std::string analyze_input;
    auto* analyze = app.add_subcommand("analyze", "Independence report for one graph");
    analyze->add_option("input", analyze_input, "FamilySpec, graph6 or @file")->required();

    std::string left, right;
    bool check = false;
    auto* product = app.add_subcommand("product", "Report on the direct product G x H");
    product->add_option("G", left, "First factor")->required();
    product->add_option("H", right, "Second factor")->required();
    product->add_flag("--check", check, "Check the product claims on this pair");

    std::vector<std::string> specs;
    int corpus_n = 0;
    bool connected = false;
    bool classes = false;
    auto* generate = app.add_subcommand("generate", "Emit family graphs or an exhaustive corpus");
    generate->add_option("specs", specs, "Family specs");
    generate->add_option("--corpus", corpus_n, "All graphs on 1..N vertices")->check(CLI::Range(1, 7));
    generate->add_flag("--connected", connected, "Connected graphs only");
    generate->add_flag("--classes", classes, "One graph per isomorphism class (N <= 6)");

    std::vector<std::string> claim_ids, inputs;
    int clique = 0;
    int max_n = 0;
    auto* verify = app.add_subcommand("verify", "Run the theorem suite, or one claim on one instance");
    verify->add_option("--claim", claim_ids, "Claim ids, repeatable or comma separated (default: all)")
        ->allow_extra_args(false)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->delimiter(',');
    verify->add_option("inputs", inputs, "Instance graphs (G, or G H)");
    verify->add_option("--clique", clique, "Check G x K_n claims with this n")->check(CLI::Range(2, 64));
    verify->add_option("--max-n", max_n, "Largest corpus order")->check(CLI::Range(1, 7));

    std::vector<std::string> factors;
    std::string filter = "all";
    int scan_max_n = 4;
    bool scan_connected = false;
    auto* scan = app.add_subcommand("scan", "Well-coveredness of every product of two factors");
    scan->add_option("--factors", factors, "Explicit factor list (default: the corpus)");
    scan->add_option("--max-n", scan_max_n, "Largest factor order in the corpus")->check(CLI::Range(1, 6));
    scan->add_flag("--connected", scan_connected, "Nontrivial connected factors only");
    scan->add_option("--filter", filter, "Restrict output")->check(CLI::IsMember({"all", "wc", "vwc", "wc-not-vwc"}));

    std::vector<std::string> argv_tail(args.rbegin(), args.rend());
    try {
        app.parse(std::move(argv_tail));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "wcprod " << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Printer printer(options, out);
    try {
        if (*analyze) return cmd_analyze(analyze_input, printer);
        if (*product) return cmd_product(left, right, check, options, printer);
        if (*generate) return cmd_generate(specs, corpus_n, connected, classes, printer);
        if (*verify) return cmd_verify(claim_ids, inputs, clique, max_n, options, printer);
        if (*scan) return cmd_scan(factors, scan_max_n, scan_connected, filter, options, printer);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace wcprod
