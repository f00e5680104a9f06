#include "treeinf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <vector>

namespace treeinf {

std::uint64_t binomial_capped(NodeId n, NodeId k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, static_cast<NodeId>(n - k));
    unsigned __int128 c = 1;
    for (NodeId i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (c > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(c);
}

EnumerateAllResult enumerate_all(const DirectedTree& tree, NodeId max_nodes) {
    const NodeId n = tree.node_count();
    if (n > max_nodes)
        throw guard_error("enumerate_all: " + std::to_string(n) + " nodes exceeds the limit of " +
                          std::to_string(max_nodes) + " (2^n labellings)");

    const auto edges = tree.edge_list();
    EnumerateAllResult out;
    out.k_min = 0;
    std::uint32_t best_mask = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Influence inf = 0;
        for (const auto& [p, c] : edges)
            inf += static_cast<Influence>((mask >> p & 1) & ~(mask >> c) & 1);
        const auto k = static_cast<NodeId>(std::popcount(mask));
        if (inf > out.i_max || (inf == out.i_max && k < out.k_min)) {
            out.i_max = inf;
            out.k_min = k;
            best_mask = static_cast<std::uint32_t>(mask);
        }
    }
    out.best = Labelling(n);
    for (NodeId v = 0; v < n; ++v)
        if (best_mask >> v & 1) out.best.set(v, true);
    return out;
}

EnumerateFixedKResult enumerate_fixed_k(const DirectedTree& tree, NodeId k,
                                        std::uint64_t max_labellings) {
    const NodeId n = tree.node_count();
    if (k < 0 || k > n)
        throw invalid_input_error("enumerate_fixed_k: cardinality " + std::to_string(k) +
                                  " outside 0.." + std::to_string(n));
    const std::uint64_t count = binomial_capped(n, k, max_labellings);
    if (count > max_labellings)
        throw guard_error("enumerate_fixed_k: C(" + std::to_string(n) + "," + std::to_string(k) +
                          ") exceeds the limit of " + std::to_string(max_labellings) +
                          " labellings");

    EnumerateFixedKResult out;
    out.histogram.n = n;
    out.histogram.k = k;

    const auto edges = tree.edge_list();
    std::vector<std::uint8_t> one(static_cast<std::size_t>(n), 0);
    std::vector<NodeId> combo(static_cast<std::size_t>(k));
    for (NodeId i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;

    bool more = true;
    while (more) {
        for (NodeId v : combo) one[static_cast<std::size_t>(v)] = 1;
        Influence m10 = 0, m11 = 0;
        for (const auto& [p, c] : edges) {
            if (!one[static_cast<std::size_t>(p)]) continue;
            if (one[static_cast<std::size_t>(c)]) ++m11; else ++m10;
        }
        ++out.histogram.cells[{m10, m11}];
        out.i_max = std::max(out.i_max, m10);
        for (NodeId v : combo) one[static_cast<std::size_t>(v)] = 0;

        // next combination, lexicographic
        more = false;
        for (NodeId i = k; i-- > 0;) {
            if (combo[static_cast<std::size_t>(i)] < n - k + i) {
                ++combo[static_cast<std::size_t>(i)];
                for (NodeId j = i + 1; j < k; ++j)
                    combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
                more = true;
                break;
            }
        }
    }
    return out;
}

std::string histogram_to_csv(const PhaseHistogram& histogram) {
    if (histogram.cells.empty())
        throw invalid_input_error("histogram_to_csv: empty histogram");
    std::ostringstream out;
    out << "m10,m11,count\n";
    for (const auto& [cell, count] : histogram.cells)
        out << cell.first << ',' << cell.second << ',' << count << '\n';
    return out.str();
}

PhaseHistogram histogram_from_csv(const std::string& csv) {
    PhaseHistogram histogram;
    std::istringstream in(csv);
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "m10,m11,count")
                throw invalid_input_error("histogram_from_csv: unexpected header '" + line + "'");
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        long long m10 = 0, m11 = 0;
        unsigned long long count = 0;
        char c1 = 0, c2 = 0;
        if (!(row >> m10 >> c1 >> m11 >> c2 >> count) || c1 != ',' || c2 != ',')
            throw invalid_input_error("histogram_from_csv: bad row at line " +
                                      std::to_string(line_no) + ": '" + line + "'");
        histogram.cells[{m10, m11}] += count;
    }
    if (!header_seen) throw invalid_input_error("histogram_from_csv: missing header");
    return histogram;
}

}  // namespace treeinf
