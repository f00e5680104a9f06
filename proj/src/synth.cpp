#include "treeinf/synth.hpp"

#include <algorithm>
#include <sstream>

#include "treeinf/optimal.hpp"
#include "treeinf/rng.hpp"

namespace treeinf {

DirectedTree random_tree(NodeId n, std::mt19937_64& rng) {
    if (n < 1) throw invalid_input_error("random_tree: need at least one node");
    std::vector<NodeId> parents(static_cast<std::size_t>(n), -1);
    for (NodeId v = 1; v < n; ++v) {
        std::uniform_int_distribution<NodeId> pick(0, v - 1);
        parents[static_cast<std::size_t>(v)] = pick(rng);
    }
    return DirectedTree::from_parents(std::move(parents));
}

DirectedTree random_tree_fixed_height(NodeId n, NodeId height, std::mt19937_64& rng) {
    if (n < 1) throw invalid_input_error("random_tree_fixed_height: need at least one node");
    if (height < 1 || height > n - 1)
        throw invalid_input_error("random_tree_fixed_height: height " + std::to_string(height) +
                                  " infeasible for " + std::to_string(n) + " nodes");
    std::vector<NodeId> parents(static_cast<std::size_t>(n), -1);
    std::vector<NodeId> depth(static_cast<std::size_t>(n), 0);
    for (NodeId v = 1; v <= height; ++v) {
        parents[static_cast<std::size_t>(v)] = v - 1;
        depth[static_cast<std::size_t>(v)] = v;
    }
    // Nodes of depth <= height-1 may still take children.
    std::vector<NodeId> eligible;
    eligible.reserve(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < height; ++v) eligible.push_back(v);
    for (NodeId v = height + 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
        const NodeId p = eligible[pick(rng)];
        parents[static_cast<std::size_t>(v)] = p;
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(p)] + 1;
        if (depth[static_cast<std::size_t>(v)] < height) eligible.push_back(v);
    }
    return DirectedTree::from_parents(std::move(parents));
}

NodeId tree_height(const DirectedTree& tree) {
    std::vector<NodeId> depth(static_cast<std::size_t>(tree.node_count()), 0);
    NodeId h = 0;
    for (NodeId v : tree.topological_order()) {
        const NodeId p = tree.parent(v);
        if (p < 0) continue;
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(p)] + 1;
        h = std::max(h, depth[static_cast<std::size_t>(v)]);
    }
    return h;
}

namespace {

GrowthCurvePoint sweep_point(NodeId x, int replicates,
                             const std::function<DirectedTree(std::mt19937_64&)>& make_tree,
                             std::uint64_t seed) {
    std::vector<double> i_vals, k_vals;
    i_vals.reserve(static_cast<std::size_t>(replicates));
    k_vals.reserve(static_cast<std::size_t>(replicates));
    for (int rep = 0; rep < replicates; ++rep) {
        auto rng = make_rng(seed, static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(rep));
        const DirectedTree tree = make_tree(rng);
        const InfluenceReport report = optimal_summary(tree);
        i_vals.push_back(static_cast<double>(report.influence));
        k_vals.push_back(static_cast<double>(report.k));
    }
    const MeanSd i_stats = mean_sd(i_vals);
    const MeanSd k_stats = mean_sd(k_vals);
    return {x, i_stats.mean, i_stats.sd, k_stats.mean, k_stats.sd, replicates};
}

}  // namespace

GrowthVsN growth_vs_n(const std::vector<NodeId>& n_values, int replicates, std::uint64_t seed,
                      const TreeGenerator& generator) {
    if (n_values.empty()) throw invalid_input_error("growth_vs_n: empty n range");
    if (replicates < 1) throw invalid_input_error("growth_vs_n: replicates must be positive");

    GrowthVsN out;
    std::vector<double> xs, mean_i, mean_k;
    for (NodeId n : n_values) {
        auto point = sweep_point(
            n, replicates, [&](std::mt19937_64& rng) { return generator(n, rng); }, seed);
        xs.push_back(static_cast<double>(n));
        mean_i.push_back(point.mean_i_star);
        mean_k.push_back(point.mean_k_star);
        out.points.push_back(std::move(point));
    }
    out.i_star_fit = ols_fit(xs, mean_i);
    out.k_star_fit = ols_fit(xs, mean_k);
    return out;
}

std::vector<GrowthCurvePoint> growth_vs_height(NodeId n, const std::vector<NodeId>& h_values,
                                               int replicates, std::uint64_t seed) {
    if (h_values.empty()) throw invalid_input_error("growth_vs_height: empty height range");
    if (replicates < 1) throw invalid_input_error("growth_vs_height: replicates must be positive");
    std::vector<GrowthCurvePoint> points;
    points.reserve(h_values.size());
    for (NodeId h : h_values) {
        points.push_back(sweep_point(
            h, replicates,
            [&](std::mt19937_64& rng) { return random_tree_fixed_height(n, h, rng); }, seed));
    }
    return points;
}

std::string curve_to_csv(const std::vector<GrowthCurvePoint>& points) {
    std::ostringstream out;
    out << "x,mean_I,sd_I,mean_k,sd_k\n";
    for (const auto& p : points) {
        out << p.x << ',' << p.mean_i_star << ',' << p.sd_i_star << ',' << p.mean_k_star << ','
            << p.sd_k_star << '\n';
    }
    return out.str();
}

}  // namespace treeinf
