#pragma once

#include <chrono>
#include <cstdint>

#include "lamtree/verifier.hpp"

namespace lamtree {

inline constexpr int kDefaultMaxSearchEdges = 10;

struct SearchOptions {
    int max_edges = kDefaultMaxSearchEdges;
    bool prune = true;
    /// Worker count for the split over the first edge's label; 0 = one task
    /// per candidate label. The result is identical for every value.
    int parallelism = 0;
};

struct SearchResult {
    std::int64_t chi_la = 0;
    LabeledExplicitTree witness;
    std::uint64_t labelings_examined = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Exact local antimagic chromatic number of a small explicit tree by
/// enumeration of all m! labelings. Ties between witnesses are broken by
/// the lexicographically smallest label sequence in input edge order.
SearchResult brute_force_chi_la(const ExplicitTree& tree, SearchOptions options = {});

/// True when the brute-force chi_la respects the leaves+1 lower bound.
/// A false return means a bug in the search, not a discovery.
bool confirm_lower_bound(const ExplicitTree& tree, SearchOptions options = {});

}  // namespace lamtree
