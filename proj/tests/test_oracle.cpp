#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lamtree/labeler.hpp"
#include "lamtree/oracle.hpp"
#include "lamtree/verifier.hpp"
#include "tree_enumeration.hpp"

using lamtree::ExplicitTree;
using lamtree::SearchOptions;
using lamtree::SearchResult;

namespace {

ExplicitTree path(int vertices) {
    ExplicitTree tree;
    tree.nodes = vertices;
    for (int v = 0; v + 1 < vertices; ++v) tree.edges.emplace_back(v, v + 1);
    return tree;
}

ExplicitTree star(int legs) {
    ExplicitTree tree;
    tree.nodes = legs + 1;
    for (int v = 1; v <= legs; ++v) tree.edges.emplace_back(0, v);
    return tree;
}

ExplicitTree complete_binary_two_levels() {
    ExplicitTree tree;
    tree.nodes = 7;
    tree.edges = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}};
    return tree;
}

}  // namespace

TEST_CASE("path on three vertices has chi_la 3") {
    const SearchResult result = lamtree::brute_force_chi_la(path(3));
    CHECK(result.chi_la == 3);
    const lamtree::ColorReport report = lamtree::check(result.witness);
    CHECK(report.is_local_antimagic);
    CHECK(report.distinct_colors == 3);
}

TEST_CASE("star with three legs has chi_la 4") {
    SearchOptions unpruned;
    unpruned.prune = false;
    const SearchResult result = lamtree::brute_force_chi_la(star(3), unpruned);
    CHECK(result.chi_la == 4);
    CHECK(result.labelings_examined == 6);  // 3!
}

TEST_CASE("full enumeration counts m! labelings") {
    SearchOptions unpruned;
    unpruned.prune = false;
    CHECK(lamtree::brute_force_chi_la(path(3), unpruned).labelings_examined == 2);
    CHECK(lamtree::brute_force_chi_la(path(5), unpruned).labelings_examined == 24);
    CHECK(lamtree::brute_force_chi_la(star(4), unpruned).labelings_examined == 24);
}

TEST_CASE("two-level binary tree: exact value matches the construction") {
    const SearchResult result = lamtree::brute_force_chi_la(complete_binary_two_levels());
    CHECK(result.chi_la >= 5);
    const std::int64_t constructive =
        lamtree::check(lamtree::label_tree(2, 2)).distinct_colors;
    CHECK(result.chi_la <= constructive);
    CHECK(result.chi_la == 5);

    const lamtree::ColorReport witness_report = lamtree::check(result.witness);
    CHECK(witness_report.is_local_antimagic);
    CHECK(witness_report.distinct_colors == result.chi_la);
}

TEST_CASE("lower bound holds for the named instances") {
    CHECK(lamtree::confirm_lower_bound(path(4)));
    CHECK(lamtree::confirm_lower_bound(star(4)));
}

TEST_CASE("lower bound holds for every tree with at most 5 edges") {
    for (const ExplicitTree& tree : lamtree_test::all_trees(6))
        CHECK(lamtree::confirm_lower_bound(tree));
}

TEST_CASE("pruning never changes the answer") {
    SearchOptions pruned;
    SearchOptions unpruned;
    unpruned.prune = false;
    for (const ExplicitTree& tree : lamtree_test::all_trees(6)) {
        const SearchResult fast = lamtree::brute_force_chi_la(tree, pruned);
        const SearchResult slow = lamtree::brute_force_chi_la(tree, unpruned);
        CHECK(fast.chi_la == slow.chi_la);
        CHECK(fast.witness.edges == slow.witness.edges);
    }
}

TEST_CASE("results are deterministic across runs and parallelism degrees") {
    SearchOptions sequential;
    sequential.parallelism = 1;
    const SearchResult a = lamtree::brute_force_chi_la(complete_binary_two_levels());
    const SearchResult b = lamtree::brute_force_chi_la(complete_binary_two_levels());
    const SearchResult c = lamtree::brute_force_chi_la(complete_binary_two_levels(), sequential);
    CHECK(a.chi_la == b.chi_la);
    CHECK(a.witness.edges == b.witness.edges);
    CHECK(a.labelings_examined == b.labelings_examined);
    CHECK(a.chi_la == c.chi_la);
    CHECK(a.witness.edges == c.witness.edges);
    CHECK(a.labelings_examined == c.labelings_examined);
}

TEST_CASE("guards reject bad inputs") {
    ExplicitTree k2;
    k2.nodes = 2;
    k2.edges = {{0, 1}};
    CHECK_THROWS_AS(lamtree::brute_force_chi_la(k2), std::invalid_argument);

    ExplicitTree disconnected;
    disconnected.nodes = 4;
    disconnected.edges = {{0, 1}, {2, 3}, {3, 2}};
    CHECK_THROWS_AS(lamtree::brute_force_chi_la(disconnected), std::invalid_argument);

    SearchOptions tight;
    tight.max_edges = 3;
    CHECK_THROWS_AS(lamtree::brute_force_chi_la(path(6), tight), std::invalid_argument);
}

TEST_CASE("tree enumeration matches the known census") {
    const auto trees = lamtree_test::all_trees(8);
    std::map<std::int64_t, int> by_vertices;
    for (const ExplicitTree& tree : trees) ++by_vertices[tree.nodes];
    CHECK(by_vertices[3] == 1);
    CHECK(by_vertices[4] == 2);
    CHECK(by_vertices[5] == 3);
    CHECK(by_vertices[6] == 6);
    CHECK(by_vertices[7] == 11);
    CHECK(by_vertices[8] == 23);
}
