#pragma once

#include <string>
#include <vector>

#include "lamtree/labeler.hpp"
#include "lamtree/oracle.hpp"
#include "lamtree/partitions.hpp"
#include "lamtree/verifier.hpp"

namespace lamtree {

enum class InputKind { labeling, explicit_tree };

/// Classifies a JSON document as a level-ordered labeling ("t"/"n"/"labels")
/// or an explicit tree ("nodes"/"edges").
InputKind detect_input(const std::string& json_text);

std::string to_json(const TuplePartition& p);
TuplePartition tuple_partition_from_json(const std::string& json_text);

std::string to_json(const EdgeLabeling& labeling);
EdgeLabeling labeling_from_json(const std::string& json_text);

std::string to_json(const LabeledExplicitTree& tree);
LabeledExplicitTree labeled_tree_from_json(const std::string& json_text);

/// Accepts [[u,v],...] or [[u,v,label],...] rows; labels are ignored.
ExplicitTree tree_from_json(const std::string& json_text);

std::string to_json(const ColorReport& report);
std::string to_json(const SearchResult& result);

std::string rows_to_json(int t, int n, const std::vector<RowColorPrediction>& rows,
                         const std::string& method);

/// DOT rendering with vertex sums on nodes (tinted by sum class) and labels
/// on edges.
std::string to_dot(const LabeledExplicitTree& tree);
std::string to_dot(const EdgeLabeling& labeling);

}  // namespace lamtree
