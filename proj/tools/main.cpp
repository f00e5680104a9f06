// treeinf: influence placement and audit on directed cascade trees.
//
// Subcommands: optimal, greedy, simulate, phase, analyze.
// Exit codes: 0 ok, 1 usage, 2 input error, 3 guard exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treeinf/cascade.hpp"
#include "treeinf/greedy.hpp"
#include "treeinf/optimal.hpp"
#include "treeinf/oracle.hpp"
#include "treeinf/rng.hpp"
#include "treeinf/synth.hpp"
#include "treeinf/tree.hpp"

namespace {

using nlohmann::json;
using namespace treeinf;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

// "star:N" | "path:N" | "random:N:SEED" | "random-height:N:H:SEED"
DirectedTree tree_from_generator_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::istringstream in(spec);
    std::string field;
    while (std::getline(in, field, ':')) parts.push_back(field);
    const auto num = [&](std::size_t i) {
        try {
            return static_cast<NodeId>(std::stol(parts.at(i)));
        } catch (const std::exception&) {
            throw invalid_input_error("bad generator spec '" + spec + "'");
        }
    };
    const auto num64 = [&](std::size_t i) {
        try {
            return static_cast<std::uint64_t>(std::stoull(parts.at(i)));
        } catch (const std::exception&) {
            throw invalid_input_error("bad generator spec '" + spec + "'");
        }
    };
    if (parts.size() == 2 && parts[0] == "star") return make_star(num(1));
    if (parts.size() == 2 && parts[0] == "path") return make_path(num(1));
    if (parts.size() == 3 && parts[0] == "random") {
        auto rng = make_rng(num64(2));
        return random_tree(num(1), rng);
    }
    if (parts.size() == 4 && parts[0] == "random-height") {
        auto rng = make_rng(num64(3));
        return random_tree_fixed_height(num(1), num(2), rng);
    }
    throw invalid_input_error("unknown generator spec '" + spec +
                              "' (use star:N, path:N, random:N:SEED, random-height:N:H:SEED)");
}

// Tree file: a JSON object {"edges": [[parent, child], ...]} with optional "n".
DirectedTree tree_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open '" + path + "'");
    json obj;
    try {
        in >> obj;
    } catch (const json::exception& e) {
        throw invalid_input_error("'" + path + "': invalid JSON: " + e.what());
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    try {
        for (const auto& e : obj.at("edges"))
            edges.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
        std::optional<NodeId> n;
        if (obj.contains("n")) n = obj["n"].get<NodeId>();
        return DirectedTree::from_edges(edges, n);
    } catch (const json::exception& e) {
        throw invalid_input_error("'" + path + "': bad tree shape: " + e.what());
    }
}

DirectedTree resolve_tree(const std::string& tree_file, const std::string& gen_spec) {
    if (!tree_file.empty() && !gen_spec.empty())
        throw invalid_input_error("give either --tree or --gen, not both");
    if (!tree_file.empty()) return tree_from_file(tree_file);
    if (!gen_spec.empty()) return tree_from_generator_spec(gen_spec);
    throw invalid_input_error("one of --tree or --gen is required");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw invalid_input_error("cannot write '" + path + "'");
    out << text;
}

std::string labelling_report_json(const InfluenceReport& report, std::uint64_t seed,
                                  const char* value_key) {
    json obj;
    obj["seed"] = seed;
    obj[value_key] = report.influence;
    obj["k"] = report.k;
    obj["one_nodes"] = report.one_nodes;
    return obj.dump(2) + "\n";
}

std::string labelling_report_csv(const InfluenceReport& report, std::uint64_t seed,
                                 const char* value_key) {
    std::ostringstream out;
    out << "# seed=" << seed << "\n" << value_key << ",k,one_nodes\n";
    out << report.influence << ',' << report.k << ',';
    for (std::size_t i = 0; i < report.one_nodes.size(); ++i) {
        if (i) out << ' ';
        out << report.one_nodes[i];
    }
    out << '\n';
    return out.str();
}

json fit_json(const FitResult& fit) {
    return json{{"slope", fit.slope},
                {"intercept", fit.intercept},
                {"r_squared", fit.r_squared},
                {"p_value", fit.p_value}};
}

int run(int argc, char** argv) {
    CLI::App app{"Influence placement and audit on directed cascade trees"};
    app.require_subcommand(1);
    // let --seed / --format appear after the subcommand name
    app.fallthrough();

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Master seed; echoed into every output artifact")
        ->envname("TREEINF_SEED");
    std::string format = "json";
    app.add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("TREEINF_FORMAT");

    std::string tree_file, gen_spec, out_path;

    auto* cmd_optimal = app.add_subcommand("optimal", "Exact optimal placement (I*, k*)");
    cmd_optimal->add_option("--tree", tree_file, "Tree file (JSON with \"edges\")");
    cmd_optimal->add_option("--gen", gen_spec, "Generator spec, e.g. star:25 or random:50:7");
    cmd_optimal->add_option("--out", out_path, "Output path (default stdout)");

    auto* cmd_greedy = app.add_subcommand("greedy", "Greedy placement with a fixed budget");
    NodeId budget = 0;
    cmd_greedy->add_option("--tree", tree_file, "Tree file (JSON with \"edges\")");
    cmd_greedy->add_option("--gen", gen_spec, "Generator spec");
    cmd_greedy->add_option("--k", budget, "Number of labels to place")->required();
    cmd_greedy->add_option("--out", out_path, "Output path (default stdout)");

    auto* cmd_simulate = app.add_subcommand("simulate", "Growth sweeps of I* and k*");
    std::string mode = "vs-n";
    NodeId sim_n_min = 5, sim_n_max = 100, sim_n = 50, sim_h_min = 1, sim_h_max = 49;
    int replicates = 100;
    std::string out_curve, out_fit;
    cmd_simulate->add_option("--mode", mode, "vs-n or vs-height")
        ->check(CLI::IsMember({"vs-n", "vs-height"}));
    cmd_simulate->add_option("--n-min", sim_n_min, "Smallest tree size (vs-n)");
    cmd_simulate->add_option("--n-max", sim_n_max, "Largest tree size (vs-n)");
    cmd_simulate->add_option("--n", sim_n, "Tree size (vs-height)");
    cmd_simulate->add_option("--h-min", sim_h_min, "Smallest height (vs-height)");
    cmd_simulate->add_option("--h-max", sim_h_max, "Largest height (vs-height)");
    cmd_simulate->add_option("--replicates", replicates, "Trees per sweep point");
    cmd_simulate->add_option("--out-curve", out_curve, "Curve CSV path (default stdout)");
    cmd_simulate->add_option("--out-fit", out_fit, "Fit JSON path (vs-n only)");

    auto* cmd_phase = app.add_subcommand("phase", "Phase histogram of (m10, m11) at fixed k");
    std::optional<NodeId> phase_k;
    std::uint64_t max_enum = 10'000'000;
    cmd_phase->add_option("--tree", tree_file, "Tree file (JSON with \"edges\")");
    cmd_phase->add_option("--gen", gen_spec, "Generator spec");
    cmd_phase->add_option("--k", phase_k, "Cardinality (default: k* of the tree)");
    cmd_phase->add_option("--max-enum", max_enum, "Guard on the number of labellings")
        ->envname("TREEINF_MAX_ENUM");
    cmd_phase->add_option("--out", out_path, "Output path (default stdout)");

    auto* cmd_analyze = app.add_subcommand("analyze", "Metrics and KL comparison for cascades");
    std::string cascades_path, edges_csv, labels_csv, out_metrics, out_comparison;
    std::string values_mode = "influence";
    NodeId min_nodes = 15, min_coordinated = 1;
    int baseline_replicates = 10;
    int bins = 20;
    double smoothing = 1e-4;
    cmd_analyze->add_option("--cascades", cascades_path, "Cascades file (JSON lines)");
    cmd_analyze->add_option("--edges", edges_csv, "Edges CSV (with --labels)");
    cmd_analyze->add_option("--labels", labels_csv, "Labels CSV (with --edges)");
    cmd_analyze->add_option("--min-nodes", min_nodes, "Keep cascades with at least this many nodes")
        ->envname("TREEINF_MIN_NODES");
    cmd_analyze
        ->add_option("--min-coordinated", min_coordinated,
                     "Keep cascades with at least this many 1-nodes")
        ->envname("TREEINF_MIN_COORDINATED");
    cmd_analyze->add_option("--replicates", baseline_replicates,
                            "Random labellings per cascade for the baseline");
    cmd_analyze->add_option("--values", values_mode, "Distributions over: influence or rho")
        ->check(CLI::IsMember({"influence", "rho"}));
    cmd_analyze->add_option("--bins", bins, "Bin count (rho mode; influence mode uses unit bins)")
        ->envname("TREEINF_BINS");
    cmd_analyze->add_option("--smoothing", smoothing, "Additive smoothing for empty q-bins")
        ->envname("TREEINF_SMOOTHING");
    cmd_analyze->add_option("--out-metrics", out_metrics, "Metrics CSV path (default stdout)");
    cmd_analyze->add_option("--out-comparison", out_comparison,
                            "Comparison JSON path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_optimal->parsed()) {
        const DirectedTree tree = resolve_tree(tree_file, gen_spec);
        const InfluenceReport report = optimal_summary(tree);
        write_text(out_path, format == "json" ? labelling_report_json(report, seed, "I_star")
                                              : labelling_report_csv(report, seed, "I_star"));
        return kExitOk;
    }

    if (cmd_greedy->parsed()) {
        const DirectedTree tree = resolve_tree(tree_file, gen_spec);
        auto rng = make_rng(seed);
        const GreedyResult result = greedy_placement(tree, budget, rng);
        const InfluenceReport report{result.influence, result.labels.k(), result.labels.ones()};
        write_text(out_path, format == "json" ? labelling_report_json(report, seed, "I_k")
                                              : labelling_report_csv(report, seed, "I_k"));
        return kExitOk;
    }

    if (cmd_simulate->parsed()) {
        if (mode == "vs-n") {
            if (sim_n_min > sim_n_max) throw invalid_input_error("--n-min exceeds --n-max");
            std::vector<NodeId> ns;
            for (NodeId n = sim_n_min; n <= sim_n_max; ++n) ns.push_back(n);
            const GrowthVsN result = growth_vs_n(ns, replicates, seed);
            write_text(out_curve, "# seed=" + std::to_string(seed) + "\n" +
                                      curve_to_csv(result.points));
            json fits;
            fits["seed"] = seed;
            fits["mode"] = "vs-n";
            fits["replicates"] = replicates;
            fits["fits"]["I_star"] = fit_json(result.i_star_fit);
            fits["fits"]["k_star"] = fit_json(result.k_star_fit);
            if (!out_fit.empty()) write_text(out_fit, fits.dump(2) + "\n");
            else if (!out_curve.empty()) std::cout << fits.dump(2) << "\n";
        } else {
            if (sim_h_min > sim_h_max) throw invalid_input_error("--h-min exceeds --h-max");
            std::vector<NodeId> hs;
            for (NodeId h = sim_h_min; h <= sim_h_max; ++h) hs.push_back(h);
            const auto points = growth_vs_height(sim_n, hs, replicates, seed);
            write_text(out_curve,
                       "# seed=" + std::to_string(seed) + "\n" + curve_to_csv(points));
        }
        return kExitOk;
    }

    if (cmd_phase->parsed()) {
        const DirectedTree tree = resolve_tree(tree_file, gen_spec);
        const NodeId k = phase_k ? *phase_k : optimal_summary(tree).k;
        const EnumerateFixedKResult result = enumerate_fixed_k(tree, k, max_enum);
        write_text(out_path, "# seed=" + std::to_string(seed) + " n=" +
                                 std::to_string(tree.node_count()) + " k=" + std::to_string(k) +
                                 "\n" + histogram_to_csv(result.histogram));
        return kExitOk;
    }

    if (cmd_analyze->parsed()) {
        std::vector<CascadeRecord> records;
        if (!cascades_path.empty()) {
            records = load_cascades_jsonl(cascades_path);
        } else if (!edges_csv.empty() && !labels_csv.empty()) {
            records = load_cascades_csv(edges_csv, labels_csv);
        } else {
            throw invalid_input_error("give --cascades, or --edges together with --labels");
        }
        FilterResult filtered = filter_cascades(std::move(records), min_nodes, min_coordinated);
        std::cerr << "kept " << filtered.kept.size() << " cascade(s), removed " << filtered.removed
                  << "\n";
        if (filtered.kept.empty())
            throw invalid_input_error("no cascades left after filtering");

        std::vector<CascadeMetrics> metrics;
        std::vector<double> real_vals, greedy_vals, random_vals;
        for (const auto& rec : filtered.kept) {
            CascadeMetrics m = per_cascade_metrics(rec, seed);
            const double baseline = random_baseline(rec, baseline_replicates, seed);
            if (values_mode == "influence") {
                real_vals.push_back(static_cast<double>(m.i_obs));
                greedy_vals.push_back(static_cast<double>(m.i_k_greedy));
                random_vals.push_back(baseline);
            } else {
                real_vals.push_back(m.rho);
                greedy_vals.push_back(static_cast<double>(m.i_k_greedy) /
                                      static_cast<double>(m.i_star));
                random_vals.push_back(baseline / static_cast<double>(m.i_star));
            }
            metrics.push_back(std::move(m));
        }

        const BinSpec bin_spec =
            values_mode == "influence"
                ? unit_integer_bins({real_vals, greedy_vals, random_vals})
                : uniform_bins({real_vals, greedy_vals, random_vals}, bins);
        const DistributionComparison cmp =
            compare_distributions(real_vals, greedy_vals, random_vals, bin_spec, smoothing);

        write_text(out_metrics, "# seed=" + std::to_string(seed) + "\n" + metrics_to_csv(metrics));
        json cj;
        cj["seed"] = seed;
        cj["values"] = values_mode;
        cj["log_base"] = "e";
        cj["smoothing"] = cmp.smoothing;
        cj["bin_spec"] = {{"lo", cmp.bin_spec.lo},
                          {"width", cmp.bin_spec.width},
                          {"count", cmp.bin_spec.count}};
        cj["kl_real_vs_greedy"] = cmp.kl_real_vs_greedy;
        cj["kl_real_vs_random"] = cmp.kl_real_vs_random;
        cj["baseline_replicates"] = baseline_replicates;
        write_text(out_comparison, cj.dump(2) + "\n");
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const invalid_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
