#include "treeinf/tree.hpp"

#include <algorithm>
#include <string>

namespace treeinf {

namespace {

std::string node_str(NodeId v) { return std::to_string(v); }

}  // namespace

DirectedTree DirectedTree::from_parents(std::vector<NodeId> parents) {
    if (parents.empty()) throw invalid_input_error("tree must have at least one node");
    const auto n = static_cast<NodeId>(parents.size());
    // Children come out in node-id order, the only order a parent array has.
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(parents.size());
    for (NodeId v = 0; v < n; ++v) {
        NodeId p = parents[static_cast<std::size_t>(v)];
        if (p != -1) edges.emplace_back(p, v);
    }
    return from_edges(edges, n);
}

DirectedTree DirectedTree::from_edges(const std::vector<std::pair<NodeId, NodeId>>& edges,
                                      std::optional<NodeId> node_count) {
    NodeId n = node_count.value_or(0);
    if (!node_count) {
        NodeId max_id = 0;
        for (const auto& [p, c] : edges) max_id = std::max({max_id, p, c});
        n = edges.empty() ? 1 : max_id + 1;
    }
    if (n <= 0) throw invalid_input_error("tree must have at least one node");

    DirectedTree t;
    t.n_ = n;
    t.parent_.assign(static_cast<std::size_t>(n), -1);
    for (const auto& [p, c] : edges) {
        if (p < 0 || p >= n || c < 0 || c >= n)
            throw invalid_input_error("edge (" + node_str(p) + "," + node_str(c) +
                                      ") references a node outside 0.." + node_str(n - 1));
        if (p == c) throw invalid_input_error("self loop at node " + node_str(p));
        if (t.parent_[static_cast<std::size_t>(c)] != -1)
            throw invalid_input_error("node " + node_str(c) + " has multiple parents");
        t.parent_[static_cast<std::size_t>(c)] = p;
    }

    NodeId root = -1;
    NodeId roots = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (t.parent_[static_cast<std::size_t>(v)] == -1) {
            ++roots;
            if (roots > 1)
                throw invalid_input_error("multiple roots: nodes " + node_str(root) +
                                          " and " + node_str(v) + " have no parent");
            root = v;
        }
    }
    if (roots == 0) throw invalid_input_error("no root: every node has a parent (cycle)");
    t.root_ = root;
    t.build_children_and_order(edges);
    return t;
}

void DirectedTree::build_children_and_order(const std::vector<std::pair<NodeId, NodeId>>& edges) {
    const auto n = static_cast<std::size_t>(n_);
    child_off_.assign(n + 1, 0);
    for (const auto& [p, c] : edges) ++child_off_[static_cast<std::size_t>(p) + 1];
    for (std::size_t i = 1; i <= n; ++i) child_off_[i] += child_off_[i - 1];

    // Per-parent children keep the order the input listed its edges.
    child_list_.assign(edges.size(), 0);
    std::vector<NodeId> cursor(child_off_.begin(), child_off_.end() - 1);
    for (const auto& [p, c] : edges)
        child_list_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(p)]++)] = c;

    order_.clear();
    order_.reserve(n);
    order_.push_back(root_);
    for (std::size_t head = 0; head < order_.size(); ++head) {
        for (NodeId c : children(order_[head])) order_.push_back(c);
    }
    if (order_.size() != n)
        throw invalid_input_error("cycle: " + std::to_string(n - order_.size()) +
                                  " node(s) unreachable from the root");
}

std::vector<std::pair<NodeId, NodeId>> DirectedTree::edge_list() const {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0));
    for (NodeId v = 0; v < n_; ++v) {
        NodeId p = parent_[static_cast<std::size_t>(v)];
        if (p >= 0) edges.emplace_back(p, v);
    }
    return edges;
}

Labelling Labelling::from_ones(NodeId n, std::span<const NodeId> one_nodes) {
    Labelling l(n);
    for (NodeId v : one_nodes) {
        if (v < 0 || v >= n)
            throw invalid_input_error("label refers to node " + std::to_string(v) +
                                      " outside 0.." + std::to_string(n - 1));
        if (l.is_one(v))
            throw invalid_input_error("node " + std::to_string(v) + " labelled twice");
        l.set(v, true);
    }
    return l;
}

Labelling Labelling::from_bits(std::initializer_list<int> bits) {
    Labelling l(static_cast<NodeId>(bits.size()));
    NodeId v = 0;
    for (int b : bits) l.set(v++, b != 0);
    return l;
}

std::vector<NodeId> Labelling::ones() const {
    std::vector<NodeId> out;
    out.reserve(static_cast<std::size_t>(ones_));
    for (NodeId v = 0; v < size(); ++v)
        if (is_one(v)) out.push_back(v);
    return out;
}

namespace {

void check_sizes(const DirectedTree& tree, const Labelling& labels) {
    if (labels.size() != tree.node_count())
        throw invalid_input_error("labelling has " + std::to_string(labels.size()) +
                                  " entries for a tree of " + std::to_string(tree.node_count()) +
                                  " nodes");
}

}  // namespace

Influence influence(const DirectedTree& tree, const Labelling& labels) {
    check_sizes(tree, labels);
    Influence total = 0;
    for (NodeId v = 0; v < tree.node_count(); ++v) {
        NodeId p = tree.parent(v);
        if (p >= 0 && labels.is_one(p) && !labels.is_one(v)) ++total;
    }
    return total;
}

DegreeStats degree_stats(const DirectedTree& tree, const Labelling& labels, NodeId v) {
    check_sizes(tree, labels);
    if (!tree.valid_node(v))
        throw invalid_input_error("invalid node id " + std::to_string(v));
    DegreeStats s;
    for (NodeId c : tree.children(v)) {
        if (labels.is_one(c)) ++s.d1; else ++s.d0;
    }
    NodeId p = tree.parent(v);
    s.parent_is_one = (p >= 0 && labels.is_one(p)) ? 1 : 0;
    return s;
}

EdgeMix edge_mix_counts(const DirectedTree& tree, const Labelling& labels) {
    check_sizes(tree, labels);
    EdgeMix mix;
    for (NodeId v = 0; v < tree.node_count(); ++v) {
        NodeId p = tree.parent(v);
        if (p < 0 || !labels.is_one(p)) continue;
        if (labels.is_one(v)) ++mix.m11; else ++mix.m10;
    }
    return mix;
}

InfluenceBounds bounds(const DirectedTree& tree) {
    const NodeId n = tree.node_count();
    if (n < 2)
        throw invalid_input_error("bounds are stated for trees with at least 2 nodes");
    return {n / 2, static_cast<Influence>(n) - 1, 1, n / 2};
}

DirectedTree make_star(NodeId n) {
    if (n <= 0) throw invalid_input_error("tree must have at least one node");
    std::vector<NodeId> parents(static_cast<std::size_t>(n), 0);
    parents[0] = -1;
    return DirectedTree::from_parents(std::move(parents));
}

DirectedTree make_path(NodeId n) {
    if (n <= 0) throw invalid_input_error("tree must have at least one node");
    std::vector<NodeId> parents(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) parents[static_cast<std::size_t>(v)] = v - 1;
    return DirectedTree::from_parents(std::move(parents));
}

}  // namespace treeinf
