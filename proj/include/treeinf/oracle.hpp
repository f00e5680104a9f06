#pragma once

// Exhaustive ground truth for small instances: the full 2^n sweep, the
// fixed-cardinality sweep with its (m10, m11) phase histogram, and CSV
// import/export of histograms.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "treeinf/tree.hpp"

namespace treeinf {

struct EnumerateAllResult {
    Influence i_max = 0;   // max influence over all 2^n labellings
    NodeId k_min = 0;      // fewest 1-nodes among labellings achieving i_max
    Labelling best;        // achieves (i_max, k_min); first in mask order
};

// Walks all 2^n labellings. Refuses trees with more than max_nodes nodes
// (default 20) with a guard_error naming the limit.
EnumerateAllResult enumerate_all(const DirectedTree& tree, NodeId max_nodes = 20);

// Counts of labellings per (m10, m11) cell. k is the fixed cardinality, or
// nullopt when the histogram covers all labellings.
struct PhaseHistogram {
    std::map<std::pair<Influence, Influence>, std::uint64_t> cells;
    NodeId n = 0;
    std::optional<NodeId> k;
};

struct EnumerateFixedKResult {
    Influence i_max = 0;  // max m10 over all size-k labellings
    PhaseHistogram histogram;
};

// Walks all C(n, k) labellings of cardinality k in lexicographic order.
// Refuses when C(n, k) exceeds max_labellings (default 1e7).
EnumerateFixedKResult enumerate_fixed_k(const DirectedTree& tree, NodeId k,
                                        std::uint64_t max_labellings = 10'000'000);

// min(C(n, k), cap + 1); the sentinel cap + 1 means "more than cap".
std::uint64_t binomial_capped(NodeId n, NodeId k, std::uint64_t cap);

// Rows "m10,m11,count" sorted by (m10, m11), with that header line.
// An empty histogram is an error.
std::string histogram_to_csv(const PhaseHistogram& histogram);

// Parses the format above (comment lines starting with '#' are skipped).
// Only the cells survive a round trip; n and k are not part of the CSV.
PhaseHistogram histogram_from_csv(const std::string& csv);

}  // namespace treeinf
