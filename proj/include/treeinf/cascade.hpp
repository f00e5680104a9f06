#pragma once

// Observed labelled cascades: file ingestion, per-cascade efficiency
// metrics against the optimal and greedy placements, random-placement
// baselines, and histogram comparison via Kullback-Leibler divergence.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "treeinf/tree.hpp"

namespace treeinf {

struct CascadeRecord {
    std::string id;
    DirectedTree tree;
    Labelling observed;
};

// One JSON object per line:
//   {"id": "...", "edges": [[parent, child], ...], "coordinated": [node, ...]}
// Node ids are dense 0..n-1 with n inferred from the edges (no edges means
// the single node 0). Malformed records fail with the line number and id;
// duplicate ids across records are rejected.
std::vector<CascadeRecord> load_cascades_jsonl(const std::string& path);
void save_cascades_jsonl(const std::string& path, std::span<const CascadeRecord> records);

// CSV pair: an edges file "id,parent,child" (one row per edge) and a labels
// file "id,node,label" (one row per node, so single-node cascades exist in
// the labels file alone).
std::vector<CascadeRecord> load_cascades_csv(const std::string& edges_path,
                                             const std::string& labels_path);
void save_cascades_csv(const std::string& edges_path, const std::string& labels_path,
                       std::span<const CascadeRecord> records);

struct FilterResult {
    std::vector<CascadeRecord> kept;
    std::size_t removed = 0;
};

// Keeps records with at least min_nodes nodes and at least min_coordinated
// observed 1-nodes.
FilterResult filter_cascades(std::vector<CascadeRecord> records, NodeId min_nodes = 15,
                             NodeId min_coordinated = 1);

struct CascadeMetrics {
    std::string id;
    NodeId n = 0;
    NodeId k_obs = 0;
    Influence i_obs = 0;
    Influence i_star = 0;
    NodeId k_star = 0;
    Influence i_k_greedy = 0;  // greedy influence at budget k_obs
    double rho = 0.0;          // i_obs / i_star, in [0, 1]
    double rho_k = 0.0;        // i_obs / i_k_greedy; may exceed 1
};

// Runs the exact optimum and the greedy heuristic (budget k_obs) on one
// record. The greedy stream is seeded from `seed` alone, so results depend
// only on (tree, labels, seed), never on record order or id.
// Requires a filtered record: throws if I* = 0 or the greedy influence is 0
// (impossible once n >= 15 and k_obs >= 1).
CascadeMetrics per_cascade_metrics(const CascadeRecord& record, std::uint64_t seed);

// Mean influence of `replicates` uniform random labellings with k_obs ones.
double random_baseline(const CascadeRecord& record, int replicates, std::uint64_t seed);

// Histogram binning: bin i covers [lo + i*width, lo + (i+1)*width), the last
// bin is closed on the right.
struct BinSpec {
    double lo = 0.0;
    double width = 1.0;
    int count = 1;
};

// Unit-width integer bins spanning the union support of the lists.
BinSpec unit_integer_bins(std::initializer_list<std::span<const double>> lists);
// `count` equal bins spanning the union support of the lists.
BinSpec uniform_bins(std::initializer_list<std::span<const double>> lists, int count);

struct DistributionComparison {
    double kl_real_vs_greedy = 0.0;
    double kl_real_vs_random = 0.0;
    BinSpec bin_spec;
    double smoothing = 1e-4;
};

// Discrete KL divergence D(p||q) = sum p_i ln(p_i / q_i) over the common
// binning, natural log. p comes from `real` unsmoothed (empty p-bins
// contribute 0). A q with at least one empty bin gets `smoothing` added to
// every bin and is renormalised; a q with full support is used as is, so
// D(p||p) is exactly 0.
DistributionComparison compare_distributions(std::span<const double> real,
                                             std::span<const double> greedy,
                                             std::span<const double> random_vals,
                                             const BinSpec& bins, double smoothing = 1e-4);

// One row per record: id,n,k_obs,I_obs,I_star,k_star,I_k,rho,rho_k.
std::string metrics_to_csv(std::span<const CascadeMetrics> metrics);

}  // namespace treeinf
