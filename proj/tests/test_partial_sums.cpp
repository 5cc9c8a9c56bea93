#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <vector>

#include "swsc/partial_sums.hpp"

namespace swsc {
namespace {

PartialSums from_entries(const std::vector<std::uint64_t>& entries) {
    PartialSums ps(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] != 0) ps.add(i + 1, static_cast<std::int64_t>(entries[i]));
    }
    return ps;
}

TEST(PartialSums, FreshIsZero) {
    EXPECT_EQ(PartialSums(5).prefix(5), 0u);
    EXPECT_EQ(PartialSums(1).prefix(1), 0u);
    PartialSums ps(5);
    ps.add(2, 8);
    EXPECT_EQ(ps.prefix(2), 8u);
    EXPECT_THROW(PartialSums(0), std::invalid_argument);
}

TEST(PartialSums, Add) {
    PartialSums ps = from_entries({0, 8, 4, 0, 4});
    ps.add(3, -4);
    for (std::size_t i = 1; i <= 5; ++i) EXPECT_EQ(ps.value(i), (std::vector<std::uint64_t>{0, 8, 0, 0, 4})[i - 1]);

    PartialSums zeros(5);
    zeros.add(1, 16);
    EXPECT_EQ(zeros.prefix(1), 16u);

    PartialSums inv = from_entries({0, 8, 4, 0, 4});
    inv.add(5, 4);
    inv.add(5, -4);
    for (std::size_t i = 1; i <= 5; ++i) EXPECT_EQ(inv.prefix(i), from_entries({0, 8, 4, 0, 4}).prefix(i));
}

TEST(PartialSums, AddErrors) {
    PartialSums ps(4);
    EXPECT_THROW(ps.add(0, 1), std::out_of_range);
    EXPECT_THROW(ps.add(5, 1), std::out_of_range);
    ps.add(2, 3);
    EXPECT_THROW(ps.add(2, -4), std::invalid_argument);
    EXPECT_EQ(ps.value(2), 3u);
}

TEST(PartialSums, Prefix) {
    const PartialSums ps = from_entries({0, 8, 4, 0, 4});
    EXPECT_EQ(ps.prefix(2), 8u);
    EXPECT_EQ(ps.prefix(5), 16u);
    EXPECT_EQ(ps.prefix(0), 0u);
    EXPECT_THROW(ps.prefix(6), std::out_of_range);
}

TEST(PartialSums, Search) {
    const PartialSums ps = from_entries({0, 8, 4, 0, 4});
    EXPECT_EQ(ps.search(14).index, 4u);
    EXPECT_EQ(ps.search(14).prefix, 12u);
    EXPECT_EQ(ps.search(7).index, 1u);
    EXPECT_EQ(PartialSums(6).search(0).index, 6u);
}

// Flat-array reference: O(k) everything.
struct FlatSums {
    std::vector<std::uint64_t> v;
    std::uint64_t prefix(std::size_t i) const {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < i; ++j) s += v[j];
        return s;
    }
    std::size_t search(std::uint64_t b) const {
        std::size_t best = 0;
        for (std::size_t i = 0; i <= v.size(); ++i) {
            if (prefix(i) <= b) best = i;
        }
        return best;
    }
};

TEST(PartialSums, AgreesWithFlatReference) {
    std::mt19937_64 rng(2024);
    int ops = 0;
    while (ops < 100000) {
        const std::size_t k = 1 + rng() % 64;
        PartialSums ps(k);
        FlatSums flat{std::vector<std::uint64_t>(k, 0)};
        for (int step = 0; step < 500; ++step, ++ops) {
            const std::size_t i = 1 + rng() % k;
            switch (rng() % 3) {
                case 0: {
                    std::int64_t delta = static_cast<std::int64_t>(rng() % 33) - 16;
                    if (delta < 0 && static_cast<std::uint64_t>(-delta) > flat.v[i - 1]) delta = -delta;
                    ps.add(i, delta);
                    flat.v[i - 1] += static_cast<std::uint64_t>(delta);
                    break;
                }
                case 1:
                    ASSERT_EQ(ps.prefix(i), flat.prefix(i));
                    break;
                default: {
                    const std::uint64_t b = rng() % (flat.prefix(k) + 8);
                    const auto hit = ps.search(b);
                    ASSERT_EQ(hit.index, flat.search(b));
                    ASSERT_EQ(hit.prefix, flat.prefix(hit.index));
                }
            }
        }
    }
}

TEST(PartialSums, TouchesAreLogarithmic) {
    for (std::size_t k = 1; k <= 64; ++k) {
        const std::uint64_t cap = 2 * (static_cast<std::uint64_t>(std::bit_width(k)));  // 2 (floor(log2 k) + 1)
        PartialSums ps(k);
        for (std::size_t i = 1; i <= k; ++i) {
            std::uint64_t before = ps.touches();
            ps.add(i, 3);
            ASSERT_LE(ps.touches() - before, cap);
            before = ps.touches();
            (void)ps.prefix(i);
            ASSERT_LE(ps.touches() - before, cap);
            before = ps.touches();
            (void)ps.search(3 * i);
            ASSERT_LE(ps.touches() - before, cap);
        }
    }
}

}  // namespace
}  // namespace swsc
