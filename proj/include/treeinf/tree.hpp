#pragma once

// Rooted directed trees (edges oriented root -> leaves), binary node
// labellings, and the influence of a labelling: the number of directed
// edges that go from a 1-labelled node to a 0-labelled node.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "treeinf/errors.hpp"

namespace treeinf {

using NodeId = std::int32_t;
using Influence = std::int64_t;

// Rooted tree on dense node ids 0..n-1, edges oriented away from the root.
// Immutable after construction. Children keep the order in which the input
// listed them; no result downstream may depend on that order except through
// documented random tie-breaks.
class DirectedTree {
public:
    // Empty placeholder with no nodes; build real trees with the factories.
    DirectedTree() = default;

    // parents[v] is the parent of v, or -1 for the root (exactly one).
    static DirectedTree from_parents(std::vector<NodeId> parents);

    // Edge list (parent, child). The node count is inferred as max id + 1
    // unless given explicitly; an empty edge list is the single node 0.
    // Rejects multiple roots, multiple parents, cycles and bad ids with
    // distinct diagnostics.
    static DirectedTree from_edges(const std::vector<std::pair<NodeId, NodeId>>& edges,
                                   std::optional<NodeId> node_count = std::nullopt);

    NodeId node_count() const { return n_; }
    NodeId root() const { return root_; }
    bool valid_node(NodeId v) const { return v >= 0 && v < n_; }

    // -1 for the root.
    NodeId parent(NodeId v) const { return parent_[static_cast<std::size_t>(v)]; }

    std::span<const NodeId> children(NodeId v) const {
        auto b = static_cast<std::size_t>(child_off_[static_cast<std::size_t>(v)]);
        auto e = static_cast<std::size_t>(child_off_[static_cast<std::size_t>(v) + 1]);
        return {child_list_.data() + b, e - b};
    }

    NodeId out_degree(NodeId v) const {
        return child_off_[static_cast<std::size_t>(v) + 1] - child_off_[static_cast<std::size_t>(v)];
    }

    // Breadth-first order from the root: every parent precedes its children.
    // Walking it backwards visits children before parents, which is what the
    // bottom-up passes use instead of recursion.
    const std::vector<NodeId>& topological_order() const { return order_; }

    std::vector<std::pair<NodeId, NodeId>> edge_list() const;

private:
    void build_children_and_order(const std::vector<std::pair<NodeId, NodeId>>& edges);

    NodeId n_ = 0;
    NodeId root_ = 0;
    std::vector<NodeId> parent_;      // -1 for the root
    std::vector<NodeId> child_off_;   // CSR offsets, size n_+1
    std::vector<NodeId> child_list_;  // size n_-1
    std::vector<NodeId> order_;       // BFS order from the root
};

// Per-node binary labels; label 1 marks a coordinated node.
class Labelling {
public:
    Labelling() = default;
    explicit Labelling(NodeId n) : bits_(static_cast<std::size_t>(n), 0) {}

    static Labelling from_ones(NodeId n, std::span<const NodeId> one_nodes);
    static Labelling from_bits(std::initializer_list<int> bits);

    NodeId size() const { return static_cast<NodeId>(bits_.size()); }
    bool is_one(NodeId v) const { return bits_[static_cast<std::size_t>(v)] != 0; }

    void set(NodeId v, bool one) {
        auto& b = bits_[static_cast<std::size_t>(v)];
        ones_ += static_cast<NodeId>(one) - static_cast<NodeId>(b);
        b = one ? 1 : 0;
    }

    // Number of 1-nodes.
    NodeId k() const { return ones_; }

    // Ids of the 1-nodes, increasing.
    std::vector<NodeId> ones() const;

    bool operator==(const Labelling&) const = default;

private:
    std::vector<std::uint8_t> bits_;
    NodeId ones_ = 0;
};

struct DegreeStats {
    NodeId d0 = 0;          // children labelled 0
    NodeId d1 = 0;          // children labelled 1
    int parent_is_one = 0;  // 1 iff the parent exists and is a 1-node
};

struct EdgeMix {
    Influence m10 = 0;  // directed edges 1-node -> 0-node (equals the influence)
    Influence m11 = 0;  // directed edges 1-node -> 1-node
};

struct InfluenceBounds {
    Influence i_low = 0;
    Influence i_high = 0;
    NodeId k_low = 0;
    NodeId k_high = 0;
};

// Optimal placement summary: best influence, how many 1-nodes it needs,
// and which nodes they are.
struct InfluenceReport {
    Influence influence = 0;
    NodeId k = 0;
    std::vector<NodeId> one_nodes;
};

// Number of directed edges from a 1-node to a 0-node.
Influence influence(const DirectedTree& tree, const Labelling& labels);

DegreeStats degree_stats(const DirectedTree& tree, const Labelling& labels, NodeId v);

EdgeMix edge_mix_counts(const DirectedTree& tree, const Labelling& labels);

// Structural bounds over all trees and labellings on n >= 2 nodes:
// floor(n/2) <= I* <= n-1 and 1 <= k* <= floor(n/2).
InfluenceBounds bounds(const DirectedTree& tree);

// Root with n-1 leaf children.
DirectedTree make_star(NodeId n);
// Directed path 0 -> 1 -> ... -> n-1.
DirectedTree make_path(NodeId n);

}  // namespace treeinf
