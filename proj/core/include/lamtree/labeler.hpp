#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamtree/tree_model.hpp"

namespace lamtree {

inline constexpr std::int64_t kDefaultMaxLabels = 10'000'000;

/// Bijective edge labeling of a complete full t-ary tree. Labels are stored
/// flat, indexed by TaryTree::edge_ordinal.
struct EdgeLabeling {
    TaryTree tree;
    std::vector<std::int64_t> labels;

    std::int64_t label(EdgeId e) const { return labels[tree.edge_ordinal(e)]; }
    std::int64_t& label(EdgeId e) { return labels[tree.edge_ordinal(e)]; }

    friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

enum class RowKind { single, constant, constant_with_jump };

std::string to_string(RowKind kind);

/// Color census of one row of vertices (all vertices at one depth).
struct RowColorPrediction {
    int row_depth = 0;
    RowKind kind = RowKind::single;
    std::int64_t constant_color = 0;
    std::optional<std::int64_t> jump_color;

    friend bool operator==(const RowColorPrediction&, const RowColorPrediction&) = default;
};

/// Thrown when a row's sums do not fit the constant / constant-with-jump
/// shape the construction guarantees.
class RowCensusError : public std::runtime_error {
  public:
    RowCensusError(int depth, std::vector<std::int64_t> sums);

    int depth() const { return depth_; }
    const std::vector<std::int64_t>& distinct_sums() const { return sums_; }

  private:
    int depth_;
    std::vector<std::int64_t> sums_;
};

/// Builds the level-ordered labeling: level blocks from level_label_range,
/// root edges labeled ascending, then each level's block split into tuples
/// whose ascending sums meet the parents' descending labels. For even t the
/// isolated tuple lands on the vertex with the largest parent label.
EdgeLabeling label_tree(int t, int n, std::int64_t max_labels = kDefaultMaxLabels);

/// Repairs equal jump colors in adjacent rows by exchanging the label
/// subtrees under the jump vertex and the smallest-parent vertex of the
/// upper row. No-op when no two adjacent rows share a jump color.
EdgeLabeling resolve_jump_conflicts(const EdgeLabeling& labeling);

/// Closed-form row colors for even n. Rejects odd n: those instances have
/// no closed forms and are censused from a built labeling instead.
std::vector<RowColorPrediction> predict_row_colors(int t, int n);

/// Actual per-row color census of a labeling. Throws RowCensusError when a
/// row has three or more sums or two sums both held by several vertices.
std::vector<RowColorPrediction> extract_row_colors(const EdgeLabeling& labeling);

}  // namespace lamtree
