#pragma once

// Budget-constrained heuristic: place k labels greedily by marginal gain,
// then improve with label-exchange moves until no single exchange helps.

#include <random>

#include "treeinf/tree.hpp"

namespace treeinf {

// An accepted exchange: from_node drops its label, to_node takes it.
// Applying it changes the influence by exactly `gain`.
struct SwitchMove {
    NodeId from_node = -1;
    NodeId to_node = -1;
    Influence gain = 0;
};

// Exchange score Delta(v, w) for a 1-node v and a 0-node w, evaluated under
// the post-exchange labelling: d0(w) - parent_is_one(w) + parent_is_one(v),
// minus 1 when w is v's parent (the edge w->v would otherwise be counted
// both as a fresh 0-child of w and as v's parent bonus). With that
// correction the identity
//     influence(after) - influence(before) = Delta(v, w) - d0(v)
// holds exactly for every pair, adjacent ones included.
// Throws invalid_input_error unless label(v) = 1, label(w) = 0, v != w.
Influence switch_delta(const DirectedTree& tree, const Labelling& labels, NodeId v, NodeId w);

// Exact influence change of exchanging the labels of v and w.
Influence switch_gain(const DirectedTree& tree, const Labelling& labels, NodeId v, NodeId w);

// Repeatedly scans the 1-nodes in increasing id; the first one admitting an
// improving exchange performs it against a uniform pick from its best
// 0-node targets, and the scan restarts. Stops when no exchange strictly
// increases the influence. Every accepted move is a strict +1 or better, so
// at most n-1 moves are accepted. Cardinality is preserved.
Labelling try_switch(const DirectedTree& tree, Labelling labels, std::mt19937_64& rng);

struct GreedyResult {
    Labelling labels;
    Influence influence = 0;
};

// Places exactly k labels, one at a time, each on a uniform pick from the
// unlabelled nodes maximising d0(w) - parent_is_one(w) under the labels so
// far, then runs try_switch. k may be 0 or n; late picks may gain nothing
// but are still placed.
GreedyResult greedy_placement(const DirectedTree& tree, NodeId k, std::mt19937_64& rng);

}  // namespace treeinf
