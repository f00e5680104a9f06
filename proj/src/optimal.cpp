#include "treeinf/optimal.hpp"

#include <algorithm>

namespace treeinf {

OptimalResult tree_max_influence(const DirectedTree& tree) {
    const NodeId n = tree.node_count();
    DpAnnotation dp;
    dp.mi_yes.assign(static_cast<std::size_t>(n), 0);
    dp.mi_no.assign(static_cast<std::size_t>(n), 0);

    // Reverse BFS visits children before parents; each node pushes its
    // contribution into its parent, so leaves stay at (0, 0).
    const auto& order = tree.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId v = *it;
        const NodeId p = tree.parent(v);
        if (p < 0) continue;
        const auto vi = static_cast<std::size_t>(v);
        const auto pi = static_cast<std::size_t>(p);
        dp.mi_no[pi] += std::max(dp.mi_yes[vi], dp.mi_no[vi]);
        // A child whose optimum is attainable with label 0 (ties included)
        // is worth one extra influence edge to a 1-labelled parent.
        dp.mi_yes[pi] += std::max(dp.mi_yes[vi], dp.mi_no[vi] + 1);
    }

    Labelling labels(n);
    for (NodeId v = 0; v < n; ++v) {
        const auto vi = static_cast<std::size_t>(v);
        if (dp.mi_yes[vi] > dp.mi_no[vi]) labels.set(v, true);
    }

    const auto ri = static_cast<std::size_t>(tree.root());
    Influence best = std::max(dp.mi_yes[ri], dp.mi_no[ri]);
    return {best, std::move(labels), std::move(dp)};
}

Labelling clear_one_nodes(const DirectedTree& tree, const Labelling& optimal_labels) {
    const NodeId n = tree.node_count();
    const OptimalResult opt = tree_max_influence(tree);
    if (influence(tree, optimal_labels) != opt.influence)
        throw invalid_input_error(
            "clear_one_nodes: labelling does not achieve the optimal influence");

    // Second bottom-up pass: the fewest labels that realise each node's
    // optimal subtree influence, per label state. Any globally optimal
    // labelling restricted to a subtree is optimal for that subtree and its
    // root's state, so the lexicographic (influence, -labels) objective
    // decomposes over children exactly like the influence DP.
    const auto& yes = opt.annotation.mi_yes;
    const auto& no = opt.annotation.mi_no;
    std::vector<NodeId> k_yes(static_cast<std::size_t>(n), 1);
    std::vector<NodeId> k_no(static_cast<std::size_t>(n), 0);

    const auto& order = tree.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId v = *it;
        const NodeId p = tree.parent(v);
        if (p < 0) continue;
        const auto vi = static_cast<std::size_t>(v);
        const auto pi = static_cast<std::size_t>(p);
        // Parent unlabelled: the child picks its own best state.
        if (yes[vi] > no[vi]) k_no[pi] += k_yes[vi];
        else if (yes[vi] < no[vi]) k_no[pi] += k_no[vi];
        else k_no[pi] += std::min(k_yes[vi], k_no[vi]);
        // Parent labelled: an unlabelled child is worth one extra edge.
        if (yes[vi] > no[vi] + 1) k_yes[pi] += k_yes[vi];
        else if (yes[vi] < no[vi] + 1) k_yes[pi] += k_no[vi];
        else k_yes[pi] += std::min(k_yes[vi], k_no[vi]);
    }

    // Top-down extraction of the count-minimal choices.
    Labelling labels(n);
    const NodeId r = tree.root();
    const auto ri = static_cast<std::size_t>(r);
    const auto pick_own_best = [&](std::size_t vi) {
        if (yes[vi] != no[vi]) return yes[vi] > no[vi];
        return k_yes[vi] < k_no[vi];
    };
    labels.set(r, pick_own_best(ri));
    for (NodeId v : order) {
        if (v == r) continue;
        const auto vi = static_cast<std::size_t>(v);
        if (!labels.is_one(tree.parent(v))) {
            labels.set(v, pick_own_best(vi));
        } else if (yes[vi] != no[vi] + 1) {
            labels.set(v, yes[vi] > no[vi] + 1);
        } else {
            labels.set(v, k_yes[vi] < k_no[vi]);
        }
    }
    return labels;
}

InfluenceReport optimal_summary(const DirectedTree& tree) {
    OptimalResult opt = tree_max_influence(tree);
    Labelling minimal = clear_one_nodes(tree, opt.labels);
    return {opt.influence, minimal.k(), minimal.ones()};
}

}  // namespace treeinf
