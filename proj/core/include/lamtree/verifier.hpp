#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lamtree/labeler.hpp"

namespace lamtree {

/// Tree (or any simple graph) given by an explicit edge list, 0-based ids.
struct ExplicitTree {
    std::int64_t nodes = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
};

struct LabeledEdge {
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::int64_t label = 0;

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

struct LabeledExplicitTree {
    std::int64_t nodes = 0;
    std::vector<LabeledEdge> edges;

    ExplicitTree shape() const;
};

enum class Verdict { l_plus_1, l_plus_2, other };

std::string to_string(Verdict v);

/// An edge whose endpoints carry the same vertex sum.
struct EqualSumViolation {
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::int64_t sum = 0;

    friend bool operator==(const EqualSumViolation&, const EqualSumViolation&) = default;
};

struct ColorReport {
    bool is_bijection = false;
    bool is_local_antimagic = false;
    std::int64_t distinct_colors = 0;
    std::int64_t leaf_count = 0;
    std::vector<std::int64_t> colors_beyond_leaf_interval;
    Verdict verdict = Verdict::other;

    std::vector<EqualSumViolation> violations;   // sorted by edge position
    std::vector<std::int64_t> duplicate_labels;  // values used more than once
    std::vector<std::int64_t> missing_labels;    // values of [1, m] never used
};

/// Flattens a level-ordered labeling into the explicit form, nodes numbered
/// breadth-first from the root.
LabeledExplicitTree to_explicit(const EdgeLabeling& labeling);

/// Sum of incident edge labels per vertex, indexed by breadth-first ordinal.
std::vector<std::int64_t> vertex_sums(const EdgeLabeling& labeling);
std::vector<std::int64_t> vertex_sums(const LabeledExplicitTree& tree);

/// Validates bijectivity onto [1, m] and the adjacent-sum condition, counts
/// colors and classifies against leaf_count + 1 / + 2. Both overloads share
/// the explicit-tree path.
ColorReport check(const LabeledExplicitTree& tree);
ColorReport check(const EdgeLabeling& labeling);

}  // namespace lamtree
