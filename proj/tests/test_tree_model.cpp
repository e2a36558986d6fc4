#include <stdexcept>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "lamtree/tree_model.hpp"

using lamtree::Interval;
using lamtree::TaryTree;
using lamtree::tary_value;

namespace {

// Closed-form block table used as an oracle for the sequential allocation.
Interval table_range(int t, int n, int level) {
    const auto tv = [t](int nn, int kk, int aa) { return tary_value(nn, kk, aa, t); };
    if (level == 1) {
        if (n == 1) return {1, t};
        return {tv(n - 1, 2, 0), tv(n - 1, 1, 1)};
    }
    if (level == n) return {tv(n - 1, 0, 0), tv(n, 1, 1)};
    if (n % 2 == 0 && level == n - 1) return {tv(n - 2, n - 2, 0), tv(n - 1, n - 2, 2)};
    if (level % 2 == 0) return {tv(level - 2, level - 2, 0), tv(level, level, 2)};
    return {tv(n - 1, level + 1, 0), tv(n - 1, level - 1, 2)};
}

}  // namespace

TEST_CASE("t-ary numeral values") {
    CHECK(tary_value(3, 2, 0, 3) == 37);
    CHECK(tary_value(3, 1, 1, 3) == 39);
    CHECK(tary_value(3, 0, 0, 2) == 15);
    CHECK(tary_value(4, 1, 1, 2) == 30);
    CHECK(tary_value(0, 0, 0, 7) == 1);

    CHECK_THROWS_AS(tary_value(3, 2, 1, 3), std::invalid_argument);  // parity mismatch
    CHECK_THROWS_AS(tary_value(2, 3, 1, 3), std::invalid_argument);  // k > n
    CHECK_THROWS_AS(tary_value(3, 1, 2, 3), std::invalid_argument);  // a > k
}

TEST_CASE("level order") {
    CHECK(lamtree::level_order(1) == std::vector<int>{1});
    CHECK(lamtree::level_order(2) == std::vector<int>{1, 2});
    CHECK(lamtree::level_order(3) == std::vector<int>{2, 1, 3});
    CHECK(lamtree::level_order(4) == std::vector<int>{2, 3, 1, 4});
    CHECK(lamtree::level_order(5) == std::vector<int>{2, 4, 3, 1, 5});
    CHECK(lamtree::level_order(6) == std::vector<int>{2, 4, 5, 3, 1, 6});
    CHECK(lamtree::level_order(7) == std::vector<int>{2, 4, 6, 5, 3, 1, 7});

    for (int n = 1; n <= 40; ++n) {
        auto order = lamtree::level_order(n);
        REQUIRE(static_cast<int>(order.size()) == n);
        CHECK(order.back() == n);
        std::sort(order.begin(), order.end());
        for (int h = 1; h <= n; ++h) CHECK(order[static_cast<std::size_t>(h - 1)] == h);
    }
}

TEST_CASE("label ranges by sequential allocation") {
    CHECK(lamtree::level_label_range(2, 4, 2) == Interval{1, 4});
    CHECK(lamtree::level_label_range(2, 4, 3) == Interval{5, 12});
    CHECK(lamtree::level_label_range(2, 4, 1) == Interval{13, 14});
    CHECK(lamtree::level_label_range(2, 4, 4) == Interval{15, 30});

    CHECK(lamtree::level_label_range(3, 4, 1) == Interval{37, 39});

    CHECK_THROWS_AS(lamtree::level_label_range(3, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(lamtree::level_label_range(3, 4, 0), std::invalid_argument);
}

TEST_CASE("the bottom level always holds the top block") {
    for (int t = 2; t <= 6; ++t)
        for (int n = 1; n <= 8; ++n) {
            const std::int64_t lo = (lamtree::checked_pow(t, n) - 1) / (t - 1);
            const std::int64_t hi = (lamtree::checked_pow(t, n + 1) - t) / (t - 1);
            CHECK(lamtree::level_label_range(t, n, n) == Interval{lo, hi});
        }
}

TEST_CASE("blocks tile [1, m] with sizes t^h") {
    for (int t = 2; t <= 6; ++t)
        for (int n = 1; n <= 8; ++n) {
            const TaryTree tree(t, n);
            std::vector<Interval> blocks;
            for (int h = 1; h <= n; ++h) {
                const Interval block = lamtree::level_label_range(t, n, h);
                CHECK(block.length() == tree.level_size(h));
                blocks.push_back(block);
            }
            std::sort(blocks.begin(), blocks.end(),
                      [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
            CHECK(blocks.front().lo == 1);
            CHECK(blocks.back().hi == tree.edge_count());
            for (std::size_t i = 1; i < blocks.size(); ++i)
                CHECK(blocks[i].lo == blocks[i - 1].hi + 1);
        }
}

TEST_CASE("allocation agrees with the numeral table") {
    for (int t = 2; t <= 5; ++t)
        for (int n = 3; n <= 8; ++n)
            for (int level = 1; level <= n; ++level)
                CHECK(lamtree::level_label_range(t, n, level) == table_range(t, n, level));
}

TEST_CASE("counts and coordinates") {
    const TaryTree tree(3, 4);
    CHECK(tree.edge_count() == 120);
    CHECK(tree.leaf_count() == 81);
    CHECK(tree.node_count() == 121);
    CHECK(tree.level_size(2) == 9);

    for (int t = 2; t <= 5; ++t) {
        const TaryTree grid(t, 5);
        for (int depth = 1; depth <= 5; ++depth)
            for (std::int64_t i = 0; i < grid.row_size(depth); i += 7) {
                const lamtree::NodeId node{depth, i};
                const lamtree::NodeId parent = grid.parent_of(node);
                bool found = false;
                for (int j = 0; j < t; ++j)
                    if (grid.child_of(parent, j) == node) found = true;
                CHECK(found);
                const lamtree::EdgeId edge = grid.parent_edge(node);
                CHECK(grid.lower_end(edge) == node);
                CHECK(grid.upper_end(edge) == parent);
            }
    }

    CHECK_THROWS_AS(TaryTree(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(TaryTree(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(lamtree::checked_pow(10, 40), std::overflow_error);
}

TEST_CASE("edge ordinals are dense and level-major") {
    const TaryTree tree(3, 3);
    std::vector<std::int64_t> seen;
    for (int h = 1; h <= 3; ++h)
        for (std::int64_t i = 0; i < tree.level_size(h); ++i)
            seen.push_back(tree.edge_ordinal({h, i}));
    for (std::size_t i = 0; i < seen.size(); ++i)
        CHECK(seen[i] == static_cast<std::int64_t>(i));
}
