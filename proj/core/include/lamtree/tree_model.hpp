#pragma once

#include <cstdint>
#include <vector>

#include "lamtree/interval.hpp"

namespace lamtree {

/// Node in breadth-first coordinates: depth in [0, n], index in [0, t^depth).
struct NodeId {
    int depth = 0;
    std::int64_t index = 0;

    friend bool operator==(const NodeId&, const NodeId&) = default;
};

/// Edge of level h joins node (h-1, floor(i/t)) to node (h, i).
struct EdgeId {
    int level = 1;
    std::int64_t index = 0;

    friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

/// Complete full t-ary tree with n levels of edges. All structure is
/// arithmetic on (t, n); nothing is materialized.
struct TaryTree {
    int t = 2;
    int n = 1;

    TaryTree() = default;
    TaryTree(int t_, int n_);

    std::int64_t edge_count() const;    // (t^{n+1} - t) / (t - 1)
    std::int64_t node_count() const;    // (t^{n+1} - 1) / (t - 1)
    std::int64_t leaf_count() const;    // t^n
    std::int64_t level_size(int level) const;  // t^level
    std::int64_t row_size(int depth) const;    // t^depth

    std::int64_t edge_ordinal(EdgeId e) const;
    std::int64_t node_ordinal(NodeId v) const;

    NodeId parent_of(NodeId v) const;
    NodeId child_of(NodeId v, int j) const;
    NodeId upper_end(EdgeId e) const;  // node at depth level-1
    NodeId lower_end(EdgeId e) const;  // node at depth level
    EdgeId parent_edge(NodeId v) const;          // requires depth >= 1
    EdgeId child_edge(NodeId v, int j) const;    // requires depth < n

    friend bool operator==(const TaryTree&, const TaryTree&) = default;
};

/// t^exp with an overflow check.
std::int64_t checked_pow(std::int64_t t, int exp);

/// Value of the t-ary numeral with dense exponents n..k followed by
/// k-2, k-4, ..., a. Requires n >= k >= a >= 0 and k, a of equal parity.
std::int64_t tary_value(int n, int k, int a, int t);

/// Order in which the levels receive their label blocks. A permutation of
/// [1, n] ending in n.
std::vector<int> level_order(int n);

/// Block of consecutive labels assigned to `level`: blocks of size t^h are
/// allocated from 1 upward following level_order(n).
Interval level_label_range(int t, int n, int level);

}  // namespace lamtree
