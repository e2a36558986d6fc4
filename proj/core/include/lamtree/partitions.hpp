#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lamtree/interval.hpp"

namespace lamtree {

/// Shape of the multiset of tuple sums: a block of consecutive integers,
/// optionally followed by a single isolated sum strictly above the block.
struct SumProfile {
    Interval consecutive;
    std::optional<std::int64_t> isolate;

    friend bool operator==(const SumProfile&, const SumProfile&) = default;
};

/// Partition of an interval of consecutive integers into fixed-size tuples
/// whose sums form a certified profile. Tuples are stored sorted by
/// ascending sum; elements inside a tuple are sorted ascending.
struct TuplePartition {
    Interval source;
    int tuple_size = 0;
    std::vector<std::vector<std::int64_t>> tuples;
    SumProfile profile;

    std::vector<std::int64_t> tuple_sums() const;
};

/// Splits [1, 4k+2] into 2k+1 pairs whose sums are the consecutive run
/// [3k+3, 5k+3].
TuplePartition pair_partition_odd_count(std::int64_t k);

/// Splits [1, 4k] into 2k pairs whose sums are [3k+1, 5k-1] plus the
/// isolated sum 6k. No pairing of [1, 4k] has 2k consecutive sums.
TuplePartition pair_partition_even_count(std::int64_t k);

/// Translates every element by delta; tuple sums move by tuple_size * delta.
TuplePartition shift(const TuplePartition& p, std::int64_t delta);

/// Splits [base, base + tuple_size*count - 1] into `count` tuples of size
/// `tuple_size`. The sums are `count` consecutive integers when tuple_size
/// is odd or count is odd; otherwise count-1 consecutive integers plus one
/// isolate.
TuplePartition tuple_partition(int tuple_size, std::int64_t count, std::int64_t base);

/// Exhaustively decides whether [1, tuple_size*count] can be split into
/// `count` tuples of size `tuple_size` with consecutive sums. Guarded to
/// tuple_size*count <= 16.
bool consecutive_partition_exists(int tuple_size, int count);

}  // namespace lamtree
