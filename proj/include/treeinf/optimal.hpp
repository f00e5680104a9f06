#pragma once

// Exact unbounded-budget optimum: a linear-time bottom-up DP for the best
// achievable influence I*(T), and a cleanup pass that shrinks the DP
// labelling to the minimum number of 1-nodes achieving I*.

#include "treeinf/tree.hpp"

namespace treeinf {

// Per-node memo of the DP. mi_yes(v) / mi_no(v) are the best influence of
// the subtree rooted at v when v is / is not a 1-node:
//   leaf:      mi_yes = mi_no = 0
//   internal:  mi_no  = sum over children w of max(mi_yes(w), mi_no(w))
//              mi_yes = sum over children w of max(mi_yes(w), mi_no(w) + 1)
struct DpAnnotation {
    std::vector<Influence> mi_yes;
    std::vector<Influence> mi_no;
};

struct OptimalResult {
    Influence influence = 0;  // I*(T) = max(mi_yes(root), mi_no(root))
    Labelling labels;         // achieves I*; not necessarily of minimal cardinality
    DpAnnotation annotation;
};

// Computes I*(T) and a labelling achieving it in O(n). Node v ends up
// labelled 1 iff mi_yes(v) > mi_no(v). Iterative (reverse BFS sweep), so
// paths of millions of nodes do not touch the call stack.
OptimalResult tree_max_influence(const DirectedTree& tree);

// Given a labelling that achieves I*(T), returns one of minimal cardinality
// k*(T) with the same influence. Local removal rules (drop a 1-node whose
// lost edges are regained by its parent) are order-sensitive and can get
// stuck above the minimum, so this runs a second bottom-up pass that tracks
// the fewest labels realising each subtree optimum per root state, then
// extracts the choices top-down. O(n), iterative.
// Throws invalid_input_error if the input labelling is not optimal.
Labelling clear_one_nodes(const DirectedTree& tree, const Labelling& optimal_labels);

// tree_max_influence followed by clear_one_nodes.
InfluenceReport optimal_summary(const DirectedTree& tree);

}  // namespace treeinf
