#include "lamtree/labeler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lamtree/partitions.hpp"

namespace lamtree {

std::string to_string(RowKind kind) {
    switch (kind) {
        case RowKind::single: return "single";
        case RowKind::constant: return "constant";
        case RowKind::constant_with_jump: return "constant_with_jump";
    }
    return "unknown";
}

namespace {

std::string census_message(int depth, const std::vector<std::int64_t>& sums) {
    std::ostringstream os;
    os << "row at depth " << depth << " has an unexpected sum census {";
    for (std::size_t i = 0; i < sums.size(); ++i) os << (i ? "," : "") << sums[i];
    os << "}";
    return os.str();
}

}  // namespace

RowCensusError::RowCensusError(int depth, std::vector<std::int64_t> sums)
    : std::runtime_error(census_message(depth, sums)), depth_(depth), sums_(std::move(sums)) {}

namespace {

// (t=2, n=2) is the one grid point where contiguous level blocks cannot
// reach t^n + 1 colors; this fixed labeling does.
EdgeLabeling binary_two_level_labeling() {
    EdgeLabeling labeling;
    labeling.tree = TaryTree(2, 2);
    labeling.labels = {1, 4, 2, 3, 5, 6};
    return labeling;
}

std::vector<std::int64_t> row_sums(const EdgeLabeling& labeling, int depth) {
    const TaryTree& tree = labeling.tree;
    const std::int64_t width = tree.row_size(depth);
    std::vector<std::int64_t> sums(static_cast<std::size_t>(width), 0);
    for (std::int64_t v = 0; v < width; ++v) {
        std::int64_t sum = 0;
        if (depth >= 1) sum += labeling.label({depth, v});
        if (depth < tree.n)
            for (int j = 0; j < tree.t; ++j) sum += labeling.label({depth + 1, v * tree.t + j});
        sums[static_cast<std::size_t>(v)] = sum;
    }
    return sums;
}

struct RowCensus {
    RowColorPrediction prediction;
    std::int64_t jump_vertex = -1;  // row index of the jump holder, if any
};

RowCensus census_row(const EdgeLabeling& labeling, int depth) {
    const auto sums = row_sums(labeling, depth);
    RowCensus census;
    census.prediction.row_depth = depth;
    if (sums.size() == 1) {
        census.prediction.kind = RowKind::single;
        census.prediction.constant_color = sums[0];
        return census;
    }
    std::map<std::int64_t, std::int64_t> multiplicity;
    for (std::int64_t s : sums) ++multiplicity[s];
    if (multiplicity.size() == 1) {
        census.prediction.kind = RowKind::constant;
        census.prediction.constant_color = multiplicity.begin()->first;
        return census;
    }
    if (multiplicity.size() == 2) {
        auto first = multiplicity.begin();
        auto second = std::next(first);
        // The jump is the rarer sum; a 1-1 tie resolves to the larger, which
        // is where the isolated tuple sum lands in the construction.
        std::int64_t jump_sum;
        if (first->second == 1 && second->second > 1) jump_sum = first->first;
        else if (second->second == 1 && first->second > 1) jump_sum = second->first;
        else if (first->second == 1 && second->second == 1) jump_sum = second->first;
        else {
            std::vector<std::int64_t> distinct{first->first, second->first};
            throw RowCensusError(depth, distinct);
        }
        const std::int64_t constant_sum = jump_sum == first->first ? second->first : first->first;
        census.prediction.kind = RowKind::constant_with_jump;
        census.prediction.constant_color = constant_sum;
        census.prediction.jump_color = jump_sum;
        census.jump_vertex =
            std::find(sums.begin(), sums.end(), jump_sum) - sums.begin();
        return census;
    }
    std::vector<std::int64_t> distinct;
    distinct.reserve(multiplicity.size());
    for (const auto& [sum, count] : multiplicity) distinct.push_back(sum);
    throw RowCensusError(depth, distinct);
}

}  // namespace

EdgeLabeling label_tree(int t, int n, std::int64_t max_labels) {
    TaryTree tree(t, n);
    if (tree.edge_count() > max_labels)
        throw std::invalid_argument("label_tree: edge count " + std::to_string(tree.edge_count()) +
                                    " exceeds the size guard " + std::to_string(max_labels));
    if (t == 2 && n == 2) return binary_two_level_labeling();

    EdgeLabeling labeling;
    labeling.tree = tree;
    labeling.labels.assign(static_cast<std::size_t>(tree.edge_count()), 0);

    const Interval top = level_label_range(t, n, 1);
    for (int j = 0; j < t; ++j) labeling.label({1, j}) = top.lo + j;

    for (int h = 2; h <= n; ++h) {
        const Interval block = level_label_range(t, n, h);
        const std::int64_t count = tree.row_size(h - 1);
        const TuplePartition part = tuple_partition(t, count, block.lo);

        // Parents sorted by label descending meet tuple sums ascending; the
        // isolated tuple, when present, goes to the largest parent label.
        std::vector<std::int64_t> parents(static_cast<std::size_t>(count));
        std::iota(parents.begin(), parents.end(), std::int64_t{0});
        std::sort(parents.begin(), parents.end(), [&](std::int64_t a, std::int64_t b) {
            return labeling.label({h - 1, a}) > labeling.label({h - 1, b});
        });

        for (std::int64_t rank = 0; rank < count; ++rank) {
            std::size_t tuple_index;
            if (part.profile.isolate)
                tuple_index = rank == 0 ? static_cast<std::size_t>(count - 1)
                                        : static_cast<std::size_t>(rank - 1);
            else
                tuple_index = static_cast<std::size_t>(rank);
            const auto& tuple = part.tuples[tuple_index];
            const std::int64_t vertex = parents[static_cast<std::size_t>(rank)];
            for (int j = 0; j < t; ++j)
                labeling.label({h, vertex * t + j}) = tuple[static_cast<std::size_t>(j)];
        }
    }
    return labeling;
}

namespace {

// Exchanges the labels on the child edges of two same-depth vertices and on
// every edge below them, positionally. Sibling order inside each moved
// tuple is preserved, so deeper rows keep their colors.
void swap_label_subtrees(EdgeLabeling& labeling, int depth, std::int64_t a, std::int64_t b) {
    const TaryTree& tree = labeling.tree;
    std::int64_t width = tree.t;
    for (int level = depth + 1; level <= tree.n; ++level) {
        const std::int64_t a_first = a * width;
        const std::int64_t b_first = b * width;
        for (std::int64_t i = 0; i < width; ++i)
            std::swap(labeling.label({level, a_first + i}), labeling.label({level, b_first + i}));
        width *= tree.t;
    }
}

}  // namespace

EdgeLabeling resolve_jump_conflicts(const EdgeLabeling& labeling) {
    EdgeLabeling resolved = labeling;
    const TaryTree& tree = resolved.tree;
    for (int depth = 1; depth + 1 <= tree.n - 1; ++depth) {
        const RowCensus upper = census_row(resolved, depth);
        if (upper.prediction.kind != RowKind::constant_with_jump) continue;
        const RowCensus lower = census_row(resolved, depth + 1);
        if (lower.prediction.kind != RowKind::constant_with_jump) continue;
        if (*upper.prediction.jump_color != *lower.prediction.jump_color) continue;

        // Move the jump subtree onto the vertex with the smallest parent
        // label in the upper row.
        const std::int64_t width = tree.row_size(depth);
        std::int64_t smallest = 0;
        for (std::int64_t v = 1; v < width; ++v)
            if (resolved.label({depth, v}) < resolved.label({depth, smallest})) smallest = v;
        if (smallest == upper.jump_vertex) continue;
        swap_label_subtrees(resolved, depth, upper.jump_vertex, smallest);
    }
    return resolved;
}

namespace {

std::int64_t exact_div(std::int64_t numerator, std::int64_t denominator) {
    if (numerator % denominator != 0)
        throw std::logic_error("row-color formula required an exact division");
    return numerator / denominator;
}

// Color of the row right above the leaves: smallest parent label of level
// n-1 plus the largest consecutive tuple sum of the level-n partition.
// For even t the jump adds the isolated sum to the largest parent label.
void second_last_row(int t, int n, std::vector<RowColorPrediction>& rows) {
    const std::int64_t c = checked_pow(t, n - 1);
    const std::int64_t block_lo = exact_div(checked_pow(t, n) - 1, std::int64_t{t} * t - 1);
    const std::int64_t leaf_lo = exact_div(checked_pow(t, n) - 1, t - 1);
    const std::int64_t shift_all = static_cast<std::int64_t>(t) * (leaf_lo - 1);

    RowColorPrediction row;
    row.row_depth = n - 1;
    if (t % 2 == 1) {
        const std::int64_t first_sum = exact_div(checked_pow(t, n + 1) + t - c + 1, 2);
        row.kind = RowKind::constant;
        row.constant_color = block_lo + shift_all + first_sum + c - 1;
    } else {
        const std::int64_t k = c / 2;
        const std::int64_t middle_shift = (t / 2 - 1) * c;
        const std::int64_t outer = (t / 2 - 1) * (checked_pow(t, n) + 1);
        row.kind = RowKind::constant_with_jump;
        row.constant_color = block_lo + shift_all + outer + 2 * middle_shift + 5 * k - 1;
        row.jump_color = block_lo + c - 1 + shift_all + outer + 2 * middle_shift + 6 * k;
    }
    rows.push_back(row);
}

}  // namespace

std::vector<RowColorPrediction> predict_row_colors(int t, int n) {
    if (t < 2) throw std::invalid_argument("predict_row_colors: t must be >= 2");
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument(
            "predict_row_colors: closed forms exist for even n >= 2 only; census a built "
            "labeling instead");
    checked_pow(t, n + 1);

    if (t == 2 && n == 2) {
        RowColorPrediction root{0, RowKind::single, 5, std::nullopt};
        RowColorPrediction inner{1, RowKind::constant_with_jump, 6, 15};
        return {root, inner};
    }

    std::vector<RowColorPrediction> rows;
    const std::int64_t top_lo = level_label_range(t, n, 1).lo;
    rows.push_back({0, RowKind::single,
                    static_cast<std::int64_t>(t) * top_lo +
                        static_cast<std::int64_t>(t) * (t - 1) / 2,
                    std::nullopt});

    const std::int64_t t3 = static_cast<std::int64_t>(t) * t * t;
    const std::int64_t t2 = static_cast<std::int64_t>(t) * t;
    const std::int64_t denom = 2 * (static_cast<std::int64_t>(t) - 1);
    const std::int64_t odd_tail = -t2 - 1;
    const std::int64_t even_tail = -t2 - 3 * static_cast<std::int64_t>(t) + 2;
    const std::int64_t tail = (t % 2 == 1) ? odd_tail : even_tail;

    // Rows between levels h-1 and h for odd h, i.e. even depths.
    for (int depth = 2; depth <= n - 2; depth += 2) {
        const int h = depth + 1;
        RowColorPrediction row;
        row.row_depth = depth;
        row.constant_color = exact_div(
            2 * checked_pow(t, n + 1) + (-t3 + t2 - static_cast<std::int64_t>(t) + 1) * checked_pow(t, h - 1) + tail, denom);
        if (t % 2 == 1) {
            row.kind = RowKind::constant;
        } else {
            row.kind = RowKind::constant_with_jump;
            row.jump_color = exact_div(
                2 * checked_pow(t, n + 1) + (-t3 + t2 + 2 * static_cast<std::int64_t>(t) - 2) * checked_pow(t, h - 1) + tail,
                denom);
        }
        rows.push_back(row);
    }

    // Rows between levels h and h+1 for odd h, i.e. odd depths.
    for (int depth = 1; depth <= n - 3; depth += 2) {
        const int h = depth;
        RowColorPrediction row;
        row.row_depth = depth;
        row.constant_color = exact_div(
            2 * checked_pow(t, n) + (t3 - t2 + static_cast<std::int64_t>(t) - 1) * checked_pow(t, h) + tail, denom);
        if (t % 2 == 1) {
            row.kind = RowKind::constant;
        } else {
            row.kind = RowKind::constant_with_jump;
            row.jump_color = exact_div(
                2 * checked_pow(t, n) + (t3 - t2 + 4 * static_cast<std::int64_t>(t) - 4) * checked_pow(t, h) + tail, denom);
        }
        rows.push_back(row);
    }

    second_last_row(t, n, rows);
    std::sort(rows.begin(), rows.end(),
              [](const RowColorPrediction& a, const RowColorPrediction& b) {
                  return a.row_depth < b.row_depth;
              });
    return rows;
}

std::vector<RowColorPrediction> extract_row_colors(const EdgeLabeling& labeling) {
    std::vector<RowColorPrediction> rows;
    rows.reserve(static_cast<std::size_t>(labeling.tree.n));
    for (int depth = 0; depth <= labeling.tree.n - 1; ++depth)
        rows.push_back(census_row(labeling, depth).prediction);
    return rows;
}

}  // namespace lamtree
