#pragma once

// Random tree generation and the growth-rate sweeps: how the optimal
// influence I* and the optimal label count k* scale with tree size and
// with tree height.

#include <functional>
#include <random>
#include <string>

#include "treeinf/stats.hpp"
#include "treeinf/tree.hpp"

namespace treeinf {

// Pluggable generation model. The default everywhere is the uniform random
// recursive tree: node i attaches to a uniform node among 0..i-1.
using TreeGenerator = std::function<DirectedTree(NodeId n, std::mt19937_64& rng)>;

DirectedTree random_tree(NodeId n, std::mt19937_64& rng);

// Tree with exactly n nodes and height exactly h (1 <= h <= n-1): a root-to-
// leaf path of h+1 nodes pins the height, every remaining node attaches to a
// uniform node of depth at most h-1 so the height is never exceeded.
DirectedTree random_tree_fixed_height(NodeId n, NodeId height, std::mt19937_64& rng);

// Longest root-to-leaf distance in edges.
NodeId tree_height(const DirectedTree& tree);

struct GrowthCurvePoint {
    NodeId x = 0;  // n or h, depending on the sweep
    double mean_i_star = 0.0;
    double sd_i_star = 0.0;
    double mean_k_star = 0.0;
    double sd_k_star = 0.0;
    int replicates = 0;
};

struct GrowthVsN {
    std::vector<GrowthCurvePoint> points;
    FitResult i_star_fit;  // mean I* vs n
    FitResult k_star_fit;  // mean k* vs n
};

// For each n: `replicates` random trees, I* and k* from the exact optimum,
// then OLS fits of the means against n. Replicate (n, i) draws its stream
// from (seed, n, i), so results do not depend on evaluation order.
GrowthVsN growth_vs_n(const std::vector<NodeId>& n_values, int replicates, std::uint64_t seed,
                      const TreeGenerator& generator = random_tree);

std::vector<GrowthCurvePoint> growth_vs_height(NodeId n, const std::vector<NodeId>& h_values,
                                               int replicates, std::uint64_t seed);

// Columns: x, mean_I, sd_I, mean_k, sd_k.
std::string curve_to_csv(const std::vector<GrowthCurvePoint>& points);

}  // namespace treeinf
