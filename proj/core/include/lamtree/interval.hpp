#pragma once

#include <cstdint>

namespace lamtree {

/// Inclusive range of consecutive integers [lo, hi].
struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::int64_t length() const { return hi - lo + 1; }
    bool contains(std::int64_t v) const { return lo <= v && v <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace lamtree
