#include "lamtree/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lamtree {

namespace {

constexpr std::int64_t kMaxPartitionElements = 100'000'000;
constexpr std::int64_t kMaxPartitionBase = 1'000'000'000'000'000;

std::int64_t sum_of(const std::vector<std::int64_t>& tuple) {
    return std::accumulate(tuple.begin(), tuple.end(), std::int64_t{0});
}

// Sorts, certifies the exact cover of the source interval, derives the sum
// profile. Rejects any sum multiset that is not a consecutive block with at
// most one strictly larger isolate.
TuplePartition finalize(Interval source, int tuple_size,
                        std::vector<std::vector<std::int64_t>> tuples) {
    for (auto& tuple : tuples) {
        if (static_cast<int>(tuple.size()) != tuple_size)
            throw std::logic_error("partition construction produced a malformed tuple");
        std::sort(tuple.begin(), tuple.end());
    }
    std::sort(tuples.begin(), tuples.end(),
              [](const auto& a, const auto& b) { return sum_of(a) < sum_of(b); });

    std::vector<std::int64_t> cover;
    cover.reserve(static_cast<std::size_t>(source.length()));
    for (const auto& tuple : tuples) cover.insert(cover.end(), tuple.begin(), tuple.end());
    std::sort(cover.begin(), cover.end());
    if (static_cast<std::int64_t>(cover.size()) != source.length())
        throw std::logic_error("partition does not cover its source interval");
    for (std::size_t i = 0; i < cover.size(); ++i)
        if (cover[i] != source.lo + static_cast<std::int64_t>(i))
            throw std::logic_error("partition does not cover its source interval");

    std::vector<std::int64_t> sums;
    sums.reserve(tuples.size());
    for (const auto& tuple : tuples) sums.push_back(sum_of(tuple));

    SumProfile profile;
    const std::size_t count = sums.size();
    std::size_t run = 1;
    while (run < count && sums[run] == sums[run - 1] + 1) ++run;
    if (run == count) {
        profile.consecutive = {sums.front(), sums.back()};
    } else if (run == count - 1 && sums.back() > sums[count - 2] + 1) {
        profile.consecutive = {sums.front(), sums[count - 2]};
        profile.isolate = sums.back();
    } else {
        throw std::logic_error("partition sums are neither consecutive nor "
                               "consecutive-with-one-isolate");
    }

    TuplePartition result;
    result.source = source;
    result.tuple_size = tuple_size;
    result.tuples = std::move(tuples);
    result.profile = profile;
    return result;
}

TuplePartition single_tuple(int tuple_size, std::int64_t base) {
    std::vector<std::int64_t> tuple(static_cast<std::size_t>(tuple_size));
    std::iota(tuple.begin(), tuple.end(), base);
    return finalize({base, base + tuple_size - 1}, tuple_size, {std::move(tuple)});
}

}  // namespace

std::vector<std::int64_t> TuplePartition::tuple_sums() const {
    std::vector<std::int64_t> sums;
    sums.reserve(tuples.size());
    for (const auto& tuple : tuples) sums.push_back(sum_of(tuple));
    return sums;
}

TuplePartition pair_partition_odd_count(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("pair_partition_odd_count: k must be >= 1");
    std::vector<std::vector<std::int64_t>> pairs;
    pairs.reserve(static_cast<std::size_t>(2 * k + 1));
    // (1, 3k+2), (3, 3k+1), ..., (2k+1, 2k+2)
    for (std::int64_t i = 0; i <= k; ++i) pairs.push_back({2 * i + 1, 3 * k + 2 - i});
    // (2, 4k+2), (4, 4k+1), ..., (2k, 3k+3)
    for (std::int64_t j = 0; j < k; ++j) pairs.push_back({2 * j + 2, 4 * k + 2 - j});
    return finalize({1, 4 * k + 2}, 2, std::move(pairs));
}

TuplePartition pair_partition_even_count(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("pair_partition_even_count: k must be >= 1");
    std::vector<std::vector<std::int64_t>> pairs;
    pairs.reserve(static_cast<std::size_t>(2 * k));
    // (1, 3k), (3, 3k-1), ..., (2k-1, 2k+1)
    for (std::int64_t i = 0; i < k; ++i) pairs.push_back({2 * i + 1, 3 * k - i});
    // (2, 4k-1), (4, 4k-2), ..., (2k-2, 3k+1)
    for (std::int64_t j = 0; j + 2 <= k; ++j) pairs.push_back({2 * j + 2, 4 * k - 1 - j});
    // the leftover pair carries the isolated sum 6k
    pairs.push_back({2 * k, 4 * k});
    return finalize({1, 4 * k}, 2, std::move(pairs));
}

TuplePartition shift(const TuplePartition& p, std::int64_t delta) {
    TuplePartition shifted = p;
    shifted.source = {p.source.lo + delta, p.source.hi + delta};
    for (auto& tuple : shifted.tuples)
        for (auto& value : tuple) value += delta;
    const std::int64_t sum_delta = static_cast<std::int64_t>(p.tuple_size) * delta;
    shifted.profile.consecutive = {p.profile.consecutive.lo + sum_delta,
                                   p.profile.consecutive.hi + sum_delta};
    if (p.profile.isolate) shifted.profile.isolate = *p.profile.isolate + sum_delta;
    return shifted;
}

TuplePartition tuple_partition(int tuple_size, std::int64_t count, std::int64_t base) {
    if (tuple_size < 2) throw std::invalid_argument("tuple_partition: tuple_size must be >= 2");
    if (count < 1) throw std::invalid_argument("tuple_partition: count must be >= 1");
    if (count > kMaxPartitionElements / tuple_size)
        throw std::invalid_argument("tuple_partition: tuple_size * count too large");
    if (base < -kMaxPartitionBase || base > kMaxPartitionBase)
        throw std::invalid_argument("tuple_partition: |base| too large for exact sums");

    if (count == 1) return shift(single_tuple(tuple_size, 1), base - 1);

    const std::int64_t c = count;
    TuplePartition on_unit;  // built over [1, tuple_size * count]
    if (tuple_size % 2 == 1) {
        // Blocks S_1..S_t of size c. First t-1 coordinates come from
        // (S_1,S_2), (S_3,S_4), ..., reversed inside each pair so partial
        // sums are constant; S_t closes each tuple in sequence.
        std::vector<std::vector<std::int64_t>> tuples(static_cast<std::size_t>(c));
        for (std::int64_t i = 0; i < c; ++i) {
            auto& tuple = tuples[static_cast<std::size_t>(i)];
            tuple.reserve(static_cast<std::size_t>(tuple_size));
            for (int j = 0; 2 * j + 1 <= tuple_size - 2; ++j) {
                tuple.push_back(2 * c * j + 1 + i);
                tuple.push_back((2 * j + 2) * c - i);
            }
            tuple.push_back((tuple_size - 1) * c + 1 + i);
        }
        on_unit = finalize({1, tuple_size * c}, tuple_size, std::move(tuples));
    } else if (tuple_size == 2) {
        on_unit = (c % 2 == 1) ? pair_partition_odd_count((c - 1) / 2)
                               : pair_partition_even_count(c / 2);
    } else {
        // Outer coordinates from (S_1,S_t), (S_2,S_{t-1}), ... have constant
        // partial sums 1 + t*c; the two middle blocks contribute a pair
        // partition, which carries the isolate exactly when c is even.
        const std::int64_t middle_shift = (tuple_size / 2 - 1) * c;
        TuplePartition middle = (c % 2 == 1) ? pair_partition_odd_count((c - 1) / 2)
                                             : pair_partition_even_count(c / 2);
        middle = shift(middle, middle_shift);

        std::vector<std::vector<std::int64_t>> tuples(static_cast<std::size_t>(c));
        for (std::int64_t i = 0; i < c; ++i) {
            auto& tuple = tuples[static_cast<std::size_t>(i)];
            tuple.reserve(static_cast<std::size_t>(tuple_size));
            for (int j = 1; j <= tuple_size / 2 - 1; ++j) {
                tuple.push_back((j - 1) * c + 1 + i);
                tuple.push_back((tuple_size - j + 1) * c - i);
            }
            // middle.tuples is already ascending by sum
            const auto& mid = middle.tuples[static_cast<std::size_t>(i)];
            tuple.insert(tuple.end(), mid.begin(), mid.end());
        }
        on_unit = finalize({1, tuple_size * c}, tuple_size, std::move(tuples));
    }
    return shift(on_unit, base - 1);
}

namespace {

struct ConsecutiveSearch {
    int tuple_size;
    int count;
    int total;
    std::uint32_t used = 0;
    std::vector<std::int64_t> sums;

    bool viable() const {
        if (sums.size() < 2) return true;
        auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
        return *hi - *lo <= count - 1;
    }

    bool search() {
        if (static_cast<int>(sums.size()) == count) return true;
        int anchor = 0;
        while (used & (1u << anchor)) ++anchor;
        std::vector<int> members{anchor};
        used |= 1u << anchor;
        const bool found = extend(members, anchor + 1);
        used &= ~(1u << anchor);
        return found;
    }

    bool extend(std::vector<int>& members, int from) {
        if (static_cast<int>(members.size()) == tuple_size) {
            std::int64_t sum = 0;
            for (int m : members) sum += m + 1;
            // sums must stay distinct and within a count-wide window
            if (std::find(sums.begin(), sums.end(), sum) != sums.end()) return false;
            sums.push_back(sum);
            const bool found = viable() && search();
            sums.pop_back();
            return found;
        }
        for (int next = from; next < total; ++next) {
            if (used & (1u << next)) continue;
            used |= 1u << next;
            members.push_back(next);
            if (extend(members, next + 1)) {
                members.pop_back();
                used &= ~(1u << next);
                return true;
            }
            members.pop_back();
            used &= ~(1u << next);
        }
        return false;
    }
};

}  // namespace

bool consecutive_partition_exists(int tuple_size, int count) {
    if (tuple_size < 2) throw std::invalid_argument("consecutive_partition_exists: tuple_size must be >= 2");
    if (count < 1) throw std::invalid_argument("consecutive_partition_exists: count must be >= 1");
    if (static_cast<std::int64_t>(tuple_size) * count > 16)
        throw std::invalid_argument(
            "consecutive_partition_exists: tuple_size * count exceeds the exhaustive-search "
            "guard of 16");
    ConsecutiveSearch search{tuple_size, count, tuple_size * count, 0, {}};
    return search.search();
}

}  // namespace lamtree
