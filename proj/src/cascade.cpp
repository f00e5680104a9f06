#include "treeinf/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "treeinf/greedy.hpp"
#include "treeinf/optimal.hpp"
#include "treeinf/rng.hpp"

namespace treeinf {

namespace {

using nlohmann::json;

[[noreturn]] void record_error(std::size_t line_no, const std::string& id, const std::string& msg) {
    throw invalid_input_error("line " + std::to_string(line_no) +
                              (id.empty() ? std::string() : " (id '" + id + "')") + ": " + msg);
}

CascadeRecord record_from_parts(std::size_t line_no, std::string id,
                                const std::vector<std::pair<NodeId, NodeId>>& edges,
                                const std::vector<NodeId>& coordinated,
                                std::optional<NodeId> node_count = std::nullopt) {
    if (id.empty()) record_error(line_no, id, "empty cascade id");
    CascadeRecord rec;
    rec.id = std::move(id);
    try {
        rec.tree = DirectedTree::from_edges(edges, node_count);
        rec.observed = Labelling::from_ones(rec.tree.node_count(), coordinated);
    } catch (const invalid_input_error& e) {
        record_error(line_no, rec.id, e.what());
    }
    return rec;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open '" + path + "'");
    return in;
}

void check_unique_ids(const std::vector<CascadeRecord>& records) {
    std::unordered_set<std::string> seen;
    for (const auto& rec : records)
        if (!seen.insert(rec.id).second)
            throw invalid_input_error("duplicate cascade id '" + rec.id + "'");
}

}  // namespace

std::vector<CascadeRecord> load_cascades_jsonl(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<CascadeRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            record_error(line_no, "", std::string("invalid JSON: ") + e.what());
        }
        std::string id;
        std::vector<std::pair<NodeId, NodeId>> edges;
        std::vector<NodeId> coordinated;
        try {
            id = obj.at("id").get<std::string>();
            for (const auto& e : obj.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    record_error(line_no, id, "each edge must be a [parent, child] pair");
                edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
            }
            for (const auto& v : obj.at("coordinated")) coordinated.push_back(v.get<NodeId>());
        } catch (const json::exception& e) {
            record_error(line_no, id, std::string("bad record shape: ") + e.what());
        }
        records.push_back(record_from_parts(line_no, std::move(id), edges, coordinated));
    }
    check_unique_ids(records);
    return records;
}

void save_cascades_jsonl(const std::string& path, std::span<const CascadeRecord> records) {
    std::ofstream out(path);
    if (!out) throw invalid_input_error("cannot write '" + path + "'");
    for (const auto& rec : records) {
        json obj;
        obj["id"] = rec.id;
        auto edges = json::array();
        for (const auto& [p, c] : rec.tree.edge_list()) edges.push_back(json::array({p, c}));
        obj["edges"] = std::move(edges);
        obj["coordinated"] = rec.observed.ones();
        out << obj.dump() << '\n';
    }
}

namespace {

// Minimal CSV row splitter; the formats here never quote fields.
std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

NodeId parse_node(const std::string& s, std::size_t line_no, const std::string& id) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return static_cast<NodeId>(v);
    } catch (const std::exception&) {
        record_error(line_no, id, "expected an integer, got '" + s + "'");
    }
}

}  // namespace

std::vector<CascadeRecord> load_cascades_csv(const std::string& edges_path,
                                             const std::string& labels_path) {
    // The labels file declares every node of every cascade, the edges file
    // only the structure; record order follows the labels file.
    struct Parts {
        std::vector<std::pair<NodeId, NodeId>> edges;
        std::vector<NodeId> coordinated;
        NodeId n = 0;
        std::size_t first_line = 0;
    };
    std::vector<std::string> order;
    std::unordered_map<std::string, Parts> parts;

    {
        std::ifstream in = open_or_throw(labels_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            if (line == "id,node,label") continue;
            const auto fields = split_csv_row(line);
            if (fields.size() != 3) record_error(line_no, "", "expected 'id,node,label'");
            const std::string& id = fields[0];
            if (parts.find(id) == parts.end()) {
                order.push_back(id);
                parts[id].first_line = line_no;
            }
            auto& p = parts[id];
            const NodeId node = parse_node(fields[1], line_no, id);
            const NodeId label = parse_node(fields[2], line_no, id);
            if (node != p.n)
                record_error(line_no, id,
                             "label rows must list nodes 0..n-1 in order; expected node " +
                                 std::to_string(p.n));
            if (label != 0 && label != 1) record_error(line_no, id, "label must be 0 or 1");
            if (label == 1) p.coordinated.push_back(node);
            ++p.n;
        }
    }
    {
        std::ifstream in = open_or_throw(edges_path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            if (line == "id,parent,child") continue;
            const auto fields = split_csv_row(line);
            if (fields.size() != 3) record_error(line_no, "", "expected 'id,parent,child'");
            const std::string& id = fields[0];
            auto it = parts.find(id);
            if (it == parts.end())
                record_error(line_no, id, "edge row for an id absent from the labels file");
            it->second.edges.emplace_back(parse_node(fields[1], line_no, id),
                                          parse_node(fields[2], line_no, id));
        }
    }

    std::vector<CascadeRecord> records;
    records.reserve(order.size());
    for (const auto& id : order) {
        const auto& p = parts[id];
        records.push_back(record_from_parts(p.first_line, id, p.edges, p.coordinated, p.n));
    }
    check_unique_ids(records);
    return records;
}

void save_cascades_csv(const std::string& edges_path, const std::string& labels_path,
                       std::span<const CascadeRecord> records) {
    std::ofstream edges(edges_path);
    std::ofstream labels(labels_path);
    if (!edges || !labels) throw invalid_input_error("cannot write CSV output files");
    edges << "id,parent,child\n";
    labels << "id,node,label\n";
    for (const auto& rec : records) {
        for (const auto& [p, c] : rec.tree.edge_list())
            edges << rec.id << ',' << p << ',' << c << '\n';
        for (NodeId v = 0; v < rec.tree.node_count(); ++v)
            labels << rec.id << ',' << v << ',' << (rec.observed.is_one(v) ? 1 : 0) << '\n';
    }
}

FilterResult filter_cascades(std::vector<CascadeRecord> records, NodeId min_nodes,
                             NodeId min_coordinated) {
    FilterResult out;
    for (auto& rec : records) {
        if (rec.tree.node_count() >= min_nodes && rec.observed.k() >= min_coordinated)
            out.kept.push_back(std::move(rec));
        else
            ++out.removed;
    }
    return out;
}

CascadeMetrics per_cascade_metrics(const CascadeRecord& record, std::uint64_t seed) {
    CascadeMetrics m;
    m.id = record.id;
    m.n = record.tree.node_count();
    m.k_obs = record.observed.k();
    m.i_obs = influence(record.tree, record.observed);

    const InfluenceReport opt = optimal_summary(record.tree);
    m.i_star = opt.influence;
    m.k_star = opt.k;
    if (m.i_star == 0)
        throw invalid_input_error("cascade '" + record.id +
                                  "': optimal influence is 0; filter such records out");

    auto rng = make_rng(seed);
    m.i_k_greedy = greedy_placement(record.tree, m.k_obs, rng).influence;
    if (m.i_k_greedy == 0)
        throw invalid_input_error("cascade '" + record.id +
                                  "': greedy influence is 0 at budget " + std::to_string(m.k_obs) +
                                  "; filter such records out");

    m.rho = static_cast<double>(m.i_obs) / static_cast<double>(m.i_star);
    m.rho_k = static_cast<double>(m.i_obs) / static_cast<double>(m.i_k_greedy);
    return m;
}

double random_baseline(const CascadeRecord& record, int replicates, std::uint64_t seed) {
    if (record.observed.k() < 1)
        throw invalid_input_error("random_baseline: record has no coordinated nodes");
    if (replicates < 1) throw invalid_input_error("random_baseline: replicates must be positive");

    const NodeId n = record.tree.node_count();
    const NodeId k = record.observed.k();
    auto rng = make_rng(seed, 0x9a5eull);
    std::vector<NodeId> ids(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) ids[static_cast<std::size_t>(v)] = v;

    double total = 0.0;
    for (int rep = 0; rep < replicates; ++rep) {
        // partial Fisher-Yates: the first k entries become a uniform subset
        for (NodeId i = 0; i < k; ++i) {
            std::uniform_int_distribution<NodeId> pick(i, n - 1);
            std::swap(ids[static_cast<std::size_t>(i)],
                      ids[static_cast<std::size_t>(pick(rng))]);
        }
        Labelling l(n);
        for (NodeId i = 0; i < k; ++i) l.set(ids[static_cast<std::size_t>(i)], true);
        total += static_cast<double>(influence(record.tree, l));
    }
    return total / static_cast<double>(replicates);
}

namespace {

BinSpec span_bins(std::initializer_list<std::span<const double>> lists, int count, bool unit) {
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (const auto& list : lists) {
        for (double v : list) {
            if (!any) { lo = hi = v; any = true; }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!any) throw invalid_input_error("binning: no values");
    if (unit) {
        const double base = std::floor(lo);
        return {base, 1.0, static_cast<int>(std::floor(hi) - base) + 1};
    }
    if (count < 1) throw invalid_input_error("binning: need at least one bin");
    double width = (hi - lo) / static_cast<double>(count);
    if (width <= 0.0) width = 1.0;  // all values equal: everything in bin 0
    return {lo, width, count};
}

std::vector<double> histogram_probs(std::span<const double> values, const BinSpec& bins) {
    std::vector<double> h(static_cast<std::size_t>(bins.count), 0.0);
    for (double v : values) {
        auto idx = static_cast<long>(std::floor((v - bins.lo) / bins.width));
        if (idx == bins.count && v <= bins.lo + bins.width * bins.count)
            idx = bins.count - 1;  // right edge of the last bin
        if (idx < 0 || idx >= bins.count)
            throw invalid_input_error("value " + std::to_string(v) +
                                      " falls outside the binning range");
        h[static_cast<std::size_t>(idx)] += 1.0;
    }
    const auto total = static_cast<double>(values.size());
    for (double& x : h) x /= total;
    return h;
}

}  // namespace

BinSpec unit_integer_bins(std::initializer_list<std::span<const double>> lists) {
    return span_bins(lists, 0, true);
}

BinSpec uniform_bins(std::initializer_list<std::span<const double>> lists, int count) {
    return span_bins(lists, count, false);
}

DistributionComparison compare_distributions(std::span<const double> real,
                                             std::span<const double> greedy,
                                             std::span<const double> random_vals,
                                             const BinSpec& bins, double smoothing) {
    if (real.empty() || greedy.empty() || random_vals.empty())
        throw invalid_input_error("compare_distributions: empty value list");
    if (smoothing <= 0.0)
        throw invalid_input_error("compare_distributions: smoothing must be positive");

    const auto p = histogram_probs(real, bins);
    const auto kl_against = [&](std::span<const double> values) {
        auto q = histogram_probs(values, bins);
        if (std::any_of(q.begin(), q.end(), [](double x) { return x == 0.0; })) {
            double mass = 0.0;
            for (double& x : q) mass += (x += smoothing);
            for (double& x : q) x /= mass;
        }
        double d = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] > 0.0) d += p[i] * std::log(p[i] / q[i]);
        return d;
    };

    DistributionComparison out;
    out.kl_real_vs_greedy = kl_against(greedy);
    out.kl_real_vs_random = kl_against(random_vals);
    out.bin_spec = bins;
    out.smoothing = smoothing;
    return out;
}

std::string metrics_to_csv(std::span<const CascadeMetrics> metrics) {
    std::ostringstream out;
    out << "id,n,k_obs,I_obs,I_star,k_star,I_k,rho,rho_k\n";
    for (const auto& m : metrics) {
        out << m.id << ',' << m.n << ',' << m.k_obs << ',' << m.i_obs << ',' << m.i_star << ','
            << m.k_star << ',' << m.i_k_greedy << ',' << m.rho << ',' << m.rho_k << '\n';
    }
    return out.str();
}

}  // namespace treeinf
