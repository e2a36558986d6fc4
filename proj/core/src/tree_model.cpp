#include "lamtree/tree_model.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace lamtree {

std::int64_t checked_pow(std::int64_t t, int exp) {
    if (t < 1 || exp < 0) throw std::invalid_argument("checked_pow: bad base or exponent");
    std::int64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (result > std::numeric_limits<std::int64_t>::max() / t)
            throw std::overflow_error("checked_pow: t^" + std::to_string(exp) +
                                      " exceeds the integer range");
        result *= t;
    }
    return result;
}

TaryTree::TaryTree(int t_, int n_) : t(t_), n(n_) {
    if (t < 2) throw std::invalid_argument("TaryTree: branching factor must be >= 2");
    if (n < 1) throw std::invalid_argument("TaryTree: level count must be >= 1");
    checked_pow(t, n + 1);
}

std::int64_t TaryTree::edge_count() const { return (checked_pow(t, n + 1) - t) / (t - 1); }

std::int64_t TaryTree::node_count() const { return (checked_pow(t, n + 1) - 1) / (t - 1); }

std::int64_t TaryTree::leaf_count() const { return checked_pow(t, n); }

std::int64_t TaryTree::level_size(int level) const {
    if (level < 1 || level > n) throw std::invalid_argument("level_size: level out of range");
    return checked_pow(t, level);
}

std::int64_t TaryTree::row_size(int depth) const {
    if (depth < 0 || depth > n) throw std::invalid_argument("row_size: depth out of range");
    return checked_pow(t, depth);
}

std::int64_t TaryTree::edge_ordinal(EdgeId e) const {
    return (checked_pow(t, e.level) - t) / (t - 1) + e.index;
}

std::int64_t TaryTree::node_ordinal(NodeId v) const {
    return (checked_pow(t, v.depth) - 1) / (t - 1) + v.index;
}

NodeId TaryTree::parent_of(NodeId v) const {
    if (v.depth < 1) throw std::invalid_argument("parent_of: the root has no parent");
    return {v.depth - 1, v.index / t};
}

NodeId TaryTree::child_of(NodeId v, int j) const {
    if (v.depth >= n) throw std::invalid_argument("child_of: leaves have no children");
    if (j < 0 || j >= t) throw std::invalid_argument("child_of: child slot out of range");
    return {v.depth + 1, v.index * t + j};
}

NodeId TaryTree::upper_end(EdgeId e) const { return {e.level - 1, e.index / t}; }

NodeId TaryTree::lower_end(EdgeId e) const { return {e.level, e.index}; }

EdgeId TaryTree::parent_edge(NodeId v) const {
    if (v.depth < 1) throw std::invalid_argument("parent_edge: the root has no parent edge");
    return {v.depth, v.index};
}

EdgeId TaryTree::child_edge(NodeId v, int j) const {
    if (v.depth >= n) throw std::invalid_argument("child_edge: leaves have no child edges");
    if (j < 0 || j >= t) throw std::invalid_argument("child_edge: child slot out of range");
    return {v.depth + 1, v.index * t + j};
}

std::int64_t tary_value(int n, int k, int a, int t) {
    if (t < 2) throw std::invalid_argument("tary_value: base must be >= 2");
    if (!(n >= k && k >= a && a >= 0))
        throw std::invalid_argument("tary_value: requires n >= k >= a >= 0");
    if ((k - a) % 2 != 0)
        throw std::invalid_argument("tary_value: k and a must have the same parity");
    std::int64_t value = 0;
    for (int e = n; e >= k; --e) value += checked_pow(t, e);
    for (int e = k - 2; e >= a; e -= 2) value += checked_pow(t, e);
    return value;
}

std::vector<int> level_order(int n) {
    if (n < 1) throw std::invalid_argument("level_order: n must be >= 1");
    if (n == 1) return {1};
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    const int top_even = (n % 2 == 0) ? n - 2 : n - 1;
    for (int h = 2; h <= top_even; h += 2) order.push_back(h);
    const int top_odd = (n % 2 == 0) ? n - 1 : n - 2;
    for (int h = top_odd; h >= 3; h -= 2) order.push_back(h);
    order.push_back(1);
    order.push_back(n);
    return order;
}

Interval level_label_range(int t, int n, int level) {
    if (t < 2) throw std::invalid_argument("level_label_range: t must be >= 2");
    if (level < 1 || level > n)
        throw std::invalid_argument("level_label_range: level out of range");
    std::int64_t next = 1;
    for (int h : level_order(n)) {
        const std::int64_t size = checked_pow(t, h);
        if (h == level) return {next, next + size - 1};
        next += size;
    }
    throw std::logic_error("level_label_range: level missing from level_order");
}

}  // namespace lamtree
