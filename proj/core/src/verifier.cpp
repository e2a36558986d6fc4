#include "lamtree/verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamtree {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::l_plus_1: return "l_plus_1";
        case Verdict::l_plus_2: return "l_plus_2";
        case Verdict::other: return "other";
    }
    return "other";
}

ExplicitTree LabeledExplicitTree::shape() const {
    ExplicitTree shape;
    shape.nodes = nodes;
    shape.edges.reserve(edges.size());
    for (const auto& e : edges) shape.edges.emplace_back(e.u, e.v);
    return shape;
}

LabeledExplicitTree to_explicit(const EdgeLabeling& labeling) {
    const TaryTree& tree = labeling.tree;
    LabeledExplicitTree out;
    out.nodes = tree.node_count();
    out.edges.reserve(labeling.labels.size());
    for (int h = 1; h <= tree.n; ++h) {
        const std::int64_t width = tree.level_size(h);
        for (std::int64_t i = 0; i < width; ++i) {
            const EdgeId e{h, i};
            out.edges.push_back({tree.node_ordinal(tree.upper_end(e)),
                                 tree.node_ordinal(tree.lower_end(e)), labeling.label(e)});
        }
    }
    return out;
}

std::vector<std::int64_t> vertex_sums(const LabeledExplicitTree& tree) {
    std::vector<std::int64_t> sums(static_cast<std::size_t>(tree.nodes), 0);
    for (const auto& e : tree.edges) {
        if (e.u < 0 || e.u >= tree.nodes || e.v < 0 || e.v >= tree.nodes)
            throw std::invalid_argument("vertex_sums: edge endpoint out of range");
        sums[static_cast<std::size_t>(e.u)] += e.label;
        sums[static_cast<std::size_t>(e.v)] += e.label;
    }
    return sums;
}

std::vector<std::int64_t> vertex_sums(const EdgeLabeling& labeling) {
    std::vector<EdgeId> missing;
    const TaryTree& tree = labeling.tree;
    for (int h = 1; h <= tree.n; ++h)
        for (std::int64_t i = 0; i < tree.level_size(h); ++i)
            if (labeling.label({h, i}) <= 0) missing.push_back({h, i});
    if (!missing.empty()) {
        std::string message = "vertex_sums: unlabeled edges:";
        for (const EdgeId& e : missing) {
            message += " (" + std::to_string(e.level) + "," + std::to_string(e.index) + ")";
            if (message.size() > 200) { message += " ..."; break; }
        }
        throw std::invalid_argument(message);
    }
    return vertex_sums(to_explicit(labeling));
}

ColorReport check(const LabeledExplicitTree& tree) {
    ColorReport report;
    const std::int64_t m = static_cast<std::int64_t>(tree.edges.size());

    std::vector<std::int64_t> degree(static_cast<std::size_t>(tree.nodes), 0);
    for (const auto& e : tree.edges) {
        if (e.u < 0 || e.u >= tree.nodes || e.v < 0 || e.v >= tree.nodes)
            throw std::invalid_argument("check: edge endpoint out of range");
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }

    std::vector<std::int64_t> seen(static_cast<std::size_t>(m) + 1, 0);
    bool out_of_range = false;
    for (const auto& e : tree.edges) {
        if (e.label < 1 || e.label > m) out_of_range = true;
        else ++seen[static_cast<std::size_t>(e.label)];
    }
    for (std::int64_t v = 1; v <= m; ++v) {
        if (seen[static_cast<std::size_t>(v)] > 1) report.duplicate_labels.push_back(v);
        if (seen[static_cast<std::size_t>(v)] == 0) report.missing_labels.push_back(v);
    }
    report.is_bijection =
        !out_of_range && report.duplicate_labels.empty() && report.missing_labels.empty();

    const std::vector<std::int64_t> sums = vertex_sums(tree);
    for (const auto& e : tree.edges) {
        const std::int64_t su = sums[static_cast<std::size_t>(e.u)];
        const std::int64_t sv = sums[static_cast<std::size_t>(e.v)];
        if (su == sv) report.violations.push_back({e.u, e.v, su});
    }
    report.is_local_antimagic = report.is_bijection && report.violations.empty();

    std::vector<std::int64_t> distinct = sums;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    report.distinct_colors = static_cast<std::int64_t>(distinct.size());

    std::int64_t leaf_lo = 0, leaf_hi = 0;
    bool have_leaf = false;
    for (std::int64_t v = 0; v < tree.nodes; ++v) {
        if (degree[static_cast<std::size_t>(v)] != 1) continue;
        ++report.leaf_count;
        const std::int64_t s = sums[static_cast<std::size_t>(v)];
        if (!have_leaf) { leaf_lo = leaf_hi = s; have_leaf = true; }
        leaf_lo = std::min(leaf_lo, s);
        leaf_hi = std::max(leaf_hi, s);
    }
    if (have_leaf) {
        std::vector<std::int64_t> beyond;
        for (std::int64_t v = 0; v < tree.nodes; ++v) {
            if (degree[static_cast<std::size_t>(v)] <= 1) continue;
            const std::int64_t s = sums[static_cast<std::size_t>(v)];
            if (s < leaf_lo || s > leaf_hi) beyond.push_back(s);
        }
        std::sort(beyond.begin(), beyond.end());
        beyond.erase(std::unique(beyond.begin(), beyond.end()), beyond.end());
        report.colors_beyond_leaf_interval = std::move(beyond);
    }

    if (report.distinct_colors == report.leaf_count + 1) report.verdict = Verdict::l_plus_1;
    else if (report.distinct_colors == report.leaf_count + 2) report.verdict = Verdict::l_plus_2;
    else report.verdict = Verdict::other;
    return report;
}

ColorReport check(const EdgeLabeling& labeling) { return check(to_explicit(labeling)); }

}  // namespace lamtree
