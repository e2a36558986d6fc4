#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lamtree/labeler.hpp"
#include "lamtree/partitions.hpp"
#include "lamtree/serialization.hpp"
#include "lamtree/verifier.hpp"

using nlohmann::json;

TEST_CASE("tuple partition round-trips through JSON") {
    const lamtree::TuplePartition original = lamtree::tuple_partition(2, 2, 1);
    const std::string text = lamtree::to_json(original);
    const lamtree::TuplePartition back = lamtree::tuple_partition_from_json(text);
    CHECK(back.source == original.source);
    CHECK(back.tuple_size == original.tuple_size);
    CHECK(back.tuples == original.tuples);
    CHECK(back.profile == original.profile);

    const json j = json::parse(text);
    CHECK(j["source"] == json::array({1, 4}));
    CHECK(j["profile"]["isolate"] == 6);
    CHECK(j["profile"]["consecutive"] == json::array({4, 4}));

    const std::string no_isolate = lamtree::to_json(lamtree::tuple_partition(3, 2, 1));
    CHECK(json::parse(no_isolate)["profile"]["isolate"].is_null());
}

TEST_CASE("labeling JSON carries one entry per edge, level-major") {
    const lamtree::EdgeLabeling labeling = lamtree::label_tree(3, 4);
    const std::string text = lamtree::to_json(labeling);
    const json j = json::parse(text);
    CHECK(j["t"] == 3);
    CHECK(j["n"] == 4);
    REQUIRE(j["labels"].size() == 120);
    int previous_level = 0;
    std::int64_t previous_index = -1;
    for (const auto& entry : j["labels"]) {
        const int level = entry["level"].get<int>();
        const std::int64_t index = entry["index"].get<std::int64_t>();
        if (level == previous_level) {
            REQUIRE(index == previous_index + 1);
        } else {
            REQUIRE(level > previous_level);
            REQUIRE(index == 0);
        }
        previous_level = level;
        previous_index = index;
    }
    CHECK(lamtree::labeling_from_json(text) == labeling);
    CHECK(lamtree::detect_input(text) == lamtree::InputKind::labeling);
}

TEST_CASE("labeling JSON validation") {
    CHECK_THROWS_WITH_AS(lamtree::labeling_from_json(R"({"n": 2, "labels": []})"),
                         doctest::Contains("\"t\""), std::invalid_argument);

    const std::string duplicated = R"({
      "t": 2, "n": 1,
      "labels": [{"level": 1, "index": 0, "label": 1},
                 {"level": 1, "index": 0, "label": 2}]
    })";
    CHECK_THROWS_WITH_AS(lamtree::labeling_from_json(duplicated),
                         doctest::Contains("twice"), std::invalid_argument);

    const std::string incomplete = R"({
      "t": 2, "n": 1,
      "labels": [{"level": 1, "index": 0, "label": 1}]
    })";
    CHECK_THROWS_WITH_AS(lamtree::labeling_from_json(incomplete),
                         doctest::Contains("no label"), std::invalid_argument);

    CHECK_THROWS_AS(lamtree::labeling_from_json("{not json"), json::parse_error);
}

TEST_CASE("explicit trees parse with or without labels") {
    const std::string labeled = R"({"nodes": 3, "edges": [[0, 1, 1], [1, 2, 2]]})";
    const lamtree::LabeledExplicitTree with_labels = lamtree::labeled_tree_from_json(labeled);
    CHECK(with_labels.nodes == 3);
    REQUIRE(with_labels.edges.size() == 2);
    CHECK(with_labels.edges[0].label == 1);
    CHECK(lamtree::detect_input(labeled) == lamtree::InputKind::explicit_tree);

    const std::string bare = R"({"nodes": 3, "edges": [[0, 1], [1, 2]]})";
    const lamtree::ExplicitTree shape = lamtree::tree_from_json(bare);
    CHECK(shape.edges.size() == 2);
    const lamtree::ExplicitTree stripped = lamtree::tree_from_json(labeled);
    CHECK(stripped.edges == shape.edges);

    CHECK_THROWS_AS(lamtree::detect_input(R"({"foo": 1})"), std::invalid_argument);
}

TEST_CASE("report and search-result JSON shapes") {
    const lamtree::ColorReport report = lamtree::check(lamtree::label_tree(2, 2));
    const json j = json::parse(lamtree::to_json(report));
    CHECK(j["is_bijection"] == true);
    CHECK(j["is_local_antimagic"] == true);
    CHECK(j["distinct_colors"] == 5);
    CHECK(j["leaf_count"] == 4);
    CHECK(j["verdict"] == "l_plus_1");
    CHECK(j["violations"].empty());
}

TEST_CASE("identical inputs serialize to identical bytes") {
    CHECK(lamtree::to_json(lamtree::label_tree(2, 4)) ==
          lamtree::to_json(lamtree::label_tree(2, 4)));
    CHECK(lamtree::to_json(lamtree::tuple_partition(5, 9, 3)) ==
          lamtree::to_json(lamtree::tuple_partition(5, 9, 3)));
}

TEST_CASE("DOT export annotates sums and labels") {
    const lamtree::EdgeLabeling star = lamtree::label_tree(3, 1);
    const std::string dot = lamtree::to_dot(star);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("label=\"6\"") != std::string::npos);   // root sum
    CHECK(dot.find("n0 -- n1") != std::string::npos);
    CHECK(dot.find("[label=\"1\"]") != std::string::npos);  // edge label
    CHECK(lamtree::to_dot(star) == dot);
}
