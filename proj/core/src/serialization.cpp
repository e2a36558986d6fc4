#include "lamtree/serialization.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lamtree {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    return json::parse(text);  // throws with byte/line diagnostics
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    return *it;
}

json interval_to_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

Interval interval_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("an interval must be a [lo, hi] array");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace

InputKind detect_input(const std::string& json_text) {
    const json j = parse(json_text);
    if (j.contains("labels") && j.contains("t") && j.contains("n")) return InputKind::labeling;
    if (j.contains("nodes") && j.contains("edges")) return InputKind::explicit_tree;
    throw std::invalid_argument(
        "unrecognized input: expected a labeling {t, n, labels} or a tree {nodes, edges}");
}

std::string to_json(const TuplePartition& p) {
    json j;
    j["source"] = interval_to_json(p.source);
    j["tuple_size"] = p.tuple_size;
    j["tuples"] = p.tuples;
    j["profile"]["consecutive"] = interval_to_json(p.profile.consecutive);
    j["profile"]["isolate"] = p.profile.isolate ? json(*p.profile.isolate) : json(nullptr);
    return j.dump(2);
}

TuplePartition tuple_partition_from_json(const std::string& json_text) {
    const json j = parse(json_text);
    TuplePartition p;
    p.source = interval_from_json(field(j, "source"));
    p.tuple_size = field(j, "tuple_size").get<int>();
    p.tuples = field(j, "tuples").get<std::vector<std::vector<std::int64_t>>>();
    const json& profile = field(j, "profile");
    p.profile.consecutive = interval_from_json(field(profile, "consecutive"));
    const json& isolate = field(profile, "isolate");
    if (!isolate.is_null()) p.profile.isolate = isolate.get<std::int64_t>();
    return p;
}

std::string to_json(const EdgeLabeling& labeling) {
    json entries = json::array();
    const TaryTree& tree = labeling.tree;
    for (int h = 1; h <= tree.n; ++h)
        for (std::int64_t i = 0; i < tree.level_size(h); ++i)
            entries.push_back({{"level", h}, {"index", i}, {"label", labeling.label({h, i})}});
    json j;
    j["t"] = tree.t;
    j["n"] = tree.n;
    j["labels"] = std::move(entries);
    return j.dump(2);
}

EdgeLabeling labeling_from_json(const std::string& json_text) {
    const json j = parse(json_text);
    EdgeLabeling labeling;
    labeling.tree = TaryTree(field(j, "t").get<int>(), field(j, "n").get<int>());
    labeling.labels.assign(static_cast<std::size_t>(labeling.tree.edge_count()), 0);
    std::vector<char> filled(labeling.labels.size(), 0);
    for (const json& entry : field(j, "labels")) {
        const EdgeId e{field(entry, "level").get<int>(),
                       field(entry, "index").get<std::int64_t>()};
        if (e.level < 1 || e.level > labeling.tree.n || e.index < 0 ||
            e.index >= labeling.tree.level_size(e.level))
            throw std::invalid_argument("labels: edge (" + std::to_string(e.level) + "," +
                                        std::to_string(e.index) + ") is outside the tree");
        const std::size_t ordinal = static_cast<std::size_t>(labeling.tree.edge_ordinal(e));
        if (filled[ordinal])
            throw std::invalid_argument("labels: edge (" + std::to_string(e.level) + "," +
                                        std::to_string(e.index) + ") appears twice");
        filled[ordinal] = 1;
        labeling.labels[ordinal] = field(entry, "label").get<std::int64_t>();
    }
    for (std::size_t i = 0; i < filled.size(); ++i)
        if (!filled[i]) throw std::invalid_argument("labels: some edges carry no label");
    return labeling;
}

std::string to_json(const LabeledExplicitTree& tree) {
    json edges = json::array();
    for (const auto& e : tree.edges) edges.push_back({e.u, e.v, e.label});
    json j;
    j["nodes"] = tree.nodes;
    j["edges"] = std::move(edges);
    return j.dump(2);
}

LabeledExplicitTree labeled_tree_from_json(const std::string& json_text) {
    const json j = parse(json_text);
    LabeledExplicitTree tree;
    tree.nodes = field(j, "nodes").get<std::int64_t>();
    for (const json& row : field(j, "edges")) {
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("edges: expected [u, v, label] rows");
        tree.edges.push_back({row[0].get<std::int64_t>(), row[1].get<std::int64_t>(),
                              row[2].get<std::int64_t>()});
    }
    return tree;
}

ExplicitTree tree_from_json(const std::string& json_text) {
    const json j = parse(json_text);
    ExplicitTree tree;
    tree.nodes = field(j, "nodes").get<std::int64_t>();
    for (const json& row : field(j, "edges")) {
        if (!row.is_array() || (row.size() != 2 && row.size() != 3))
            throw std::invalid_argument("edges: expected [u, v] or [u, v, label] rows");
        tree.edges.emplace_back(row[0].get<std::int64_t>(), row[1].get<std::int64_t>());
    }
    return tree;
}

std::string to_json(const ColorReport& report) {
    json j;
    j["is_bijection"] = report.is_bijection;
    j["is_local_antimagic"] = report.is_local_antimagic;
    j["distinct_colors"] = report.distinct_colors;
    j["leaf_count"] = report.leaf_count;
    j["colors_beyond_leaf_interval"] = report.colors_beyond_leaf_interval;
    j["verdict"] = to_string(report.verdict);
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"u", v.u}, {"v", v.v}, {"sum", v.sum}});
    j["violations"] = std::move(violations);
    j["duplicate_labels"] = report.duplicate_labels;
    j["missing_labels"] = report.missing_labels;
    return j.dump(2);
}

std::string to_json(const SearchResult& result) {
    json j;
    j["chi_la"] = result.chi_la;
    j["labelings_examined"] = result.labelings_examined;
    j["elapsed_ms"] = result.elapsed.count();
    json edges = json::array();
    for (const auto& e : result.witness.edges) edges.push_back({e.u, e.v, e.label});
    j["witness"]["nodes"] = result.witness.nodes;
    j["witness"]["edges"] = std::move(edges);
    return j.dump(2);
}

std::string rows_to_json(int t, int n, const std::vector<RowColorPrediction>& rows,
                         const std::string& method) {
    json array = json::array();
    for (const auto& row : rows)
        array.push_back({{"row_depth", row.row_depth},
                         {"kind", to_string(row.kind)},
                         {"constant_color", row.constant_color},
                         {"jump_color", row.jump_color ? json(*row.jump_color) : json(nullptr)}});
    json j;
    j["t"] = t;
    j["n"] = n;
    j["method"] = method;
    j["rows"] = std::move(array);
    return j.dump(2);
}

namespace {

constexpr const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf", "#17becf"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

}  // namespace

std::string to_dot(const LabeledExplicitTree& tree) {
    const std::vector<std::int64_t> sums = vertex_sums(tree);
    std::vector<std::int64_t> classes(sums.begin(), sums.end());
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    std::ostringstream os;
    os << "graph labeled_tree {\n";
    os << "  node [shape=circle fontsize=10];\n";
    for (std::int64_t v = 0; v < tree.nodes; ++v) {
        const std::int64_t sum = sums[static_cast<std::size_t>(v)];
        const std::size_t rank = static_cast<std::size_t>(
            std::lower_bound(classes.begin(), classes.end(), sum) - classes.begin());
        os << "  n" << v << " [label=\"" << sum << "\" color=\"" << kPalette[rank % kPaletteSize]
           << "\" fontcolor=\"" << kPalette[rank % kPaletteSize] << "\"];\n";
    }
    for (const auto& e : tree.edges)
        os << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const EdgeLabeling& labeling) { return to_dot(to_explicit(labeling)); }

}  // namespace lamtree
