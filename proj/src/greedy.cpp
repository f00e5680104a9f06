#include "treeinf/greedy.hpp"

#include <algorithm>
#include <string>

namespace treeinf {

namespace {

void check_pair(const DirectedTree& tree, const Labelling& labels, NodeId v, NodeId w) {
    if (labels.size() != tree.node_count())
        throw invalid_input_error("labelling does not match the tree");
    if (!tree.valid_node(v) || !tree.valid_node(w) || v == w)
        throw invalid_input_error("switch needs two distinct valid nodes");
    if (!labels.is_one(v))
        throw invalid_input_error("switch: node " + std::to_string(v) + " is not a 1-node");
    if (labels.is_one(w))
        throw invalid_input_error("switch: node " + std::to_string(w) + " is not a 0-node");
}

// d0 of every node under the current labels; maintained incrementally by
// the callers that mutate labels.
std::vector<NodeId> zero_child_counts(const DirectedTree& tree, const Labelling& labels) {
    std::vector<NodeId> d0(static_cast<std::size_t>(tree.node_count()), 0);
    for (NodeId v = 0; v < tree.node_count(); ++v) {
        const NodeId p = tree.parent(v);
        if (p >= 0 && !labels.is_one(v)) ++d0[static_cast<std::size_t>(p)];
    }
    return d0;
}

// Delta from precomputed d0; O(1).
Influence delta_fast(const DirectedTree& tree, const Labelling& labels,
                     const std::vector<NodeId>& d0, NodeId v, NodeId w) {
    const NodeId pv = tree.parent(v);
    const NodeId pw = tree.parent(w);
    const bool v_child_of_w = pv == w;
    const Influence d0_post_w = d0[static_cast<std::size_t>(w)] + (v_child_of_w ? 1 : 0);
    const Influence p_post_w = (pw < 0 || pw == v) ? 0 : (labels.is_one(pw) ? 1 : 0);
    const Influence p_post_v = v_child_of_w ? 1 : ((pv >= 0 && labels.is_one(pv)) ? 1 : 0);
    return d0_post_w - p_post_w + p_post_v - (v_child_of_w ? 1 : 0);
}

}  // namespace

Influence switch_delta(const DirectedTree& tree, const Labelling& labels, NodeId v, NodeId w) {
    check_pair(tree, labels, v, w);
    return delta_fast(tree, labels, zero_child_counts(tree, labels), v, w);
}

Influence switch_gain(const DirectedTree& tree, const Labelling& labels, NodeId v, NodeId w) {
    check_pair(tree, labels, v, w);
    const auto d0 = zero_child_counts(tree, labels);
    return delta_fast(tree, labels, d0, v, w) - d0[static_cast<std::size_t>(v)];
}

Labelling try_switch(const DirectedTree& tree, Labelling labels, std::mt19937_64& rng) {
    if (labels.size() != tree.node_count())
        throw invalid_input_error("labelling does not match the tree");
    const NodeId n = tree.node_count();
    if (labels.k() == 0 || labels.k() == n) return labels;

    auto d0 = zero_child_counts(tree, labels);
    std::vector<NodeId> best_targets;
    bool improved = true;
    while (improved) {
        improved = false;
        for (NodeId v = 0; v < n && !improved; ++v) {
            if (!labels.is_one(v)) continue;
            Influence best = 0;
            best_targets.clear();
            for (NodeId w = 0; w < n; ++w) {
                if (labels.is_one(w)) continue;
                const Influence d = delta_fast(tree, labels, d0, v, w);
                if (best_targets.empty() || d > best) {
                    best = d;
                    best_targets.assign(1, w);
                } else if (d == best) {
                    best_targets.push_back(w);
                }
            }
            if (best_targets.empty() || best <= d0[static_cast<std::size_t>(v)]) continue;

            std::uniform_int_distribution<std::size_t> pick(0, best_targets.size() - 1);
            const NodeId w = best_targets[pick(rng)];
            labels.set(v, false);
            labels.set(w, true);
            const NodeId pv = tree.parent(v);
            const NodeId pw = tree.parent(w);
            if (pv >= 0) ++d0[static_cast<std::size_t>(pv)];
            if (pw >= 0) --d0[static_cast<std::size_t>(pw)];
            improved = true;  // restart the scan from the smallest id
        }
    }
    return labels;
}

GreedyResult greedy_placement(const DirectedTree& tree, NodeId k, std::mt19937_64& rng) {
    const NodeId n = tree.node_count();
    if (k < 0 || k > n)
        throw invalid_input_error("greedy_placement: budget " + std::to_string(k) +
                                  " outside 0.." + std::to_string(n));

    Labelling labels(n);
    auto d0 = zero_child_counts(tree, labels);
    std::vector<NodeId> best_nodes;
    for (NodeId placed = 0; placed < k; ++placed) {
        Influence best = 0;
        best_nodes.clear();
        for (NodeId w = 0; w < n; ++w) {
            if (labels.is_one(w)) continue;
            const NodeId p = tree.parent(w);
            const Influence score =
                d0[static_cast<std::size_t>(w)] - ((p >= 0 && labels.is_one(p)) ? 1 : 0);
            if (best_nodes.empty() || score > best) {
                best = score;
                best_nodes.assign(1, w);
            } else if (score == best) {
                best_nodes.push_back(w);
            }
        }
        std::uniform_int_distribution<std::size_t> pick(0, best_nodes.size() - 1);
        const NodeId w = best_nodes[pick(rng)];
        labels.set(w, true);
        const NodeId pw = tree.parent(w);
        if (pw >= 0) --d0[static_cast<std::size_t>(pw)];
    }

    labels = try_switch(tree, std::move(labels), rng);
    const Influence achieved = influence(tree, labels);
    return {std::move(labels), achieved};
}

}  // namespace treeinf
