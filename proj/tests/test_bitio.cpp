#include <gtest/gtest.h>

#include <random>
#include <utility>
#include <vector>

#include "swsc/bitio.hpp"

namespace swsc {
namespace {

TEST(BitWriter, SingleNibble) {
    BitWriter w;
    w.write_bits(0b1110, 4);
    EXPECT_EQ(w.finish(), (std::vector<std::uint8_t>{0xE0}));
}

TEST(BitWriter, ZeroLengthWriteIsEmpty) {
    BitWriter w;
    w.write_bits(0, 0);
    EXPECT_TRUE(w.finish().empty());
}

TEST(BitWriter, ConcatenatesMsbFirst) {
    BitWriter w;
    w.write_bits(1, 1);
    w.write_bits(0b0101, 4);
    EXPECT_EQ(w.finish(), (std::vector<std::uint8_t>{0xA8}));
}

TEST(BitWriter, RejectsValueWiderThanCount) {
    BitWriter w;
    EXPECT_THROW(w.write_bits(0b100, 2), std::invalid_argument);
    EXPECT_THROW(w.write_bits(1, 0), std::invalid_argument);
    EXPECT_THROW(w.write_bits(0, 65), std::invalid_argument);
}

TEST(BitWriter, FullWidthWrites) {
    BitWriter w;
    w.write_bits(1, 1);
    w.write_bits(0xFEDCBA9876543210ull, 64);
    EXPECT_EQ(w.bit_count(), 65u);
    const auto bytes = w.finish();
    ASSERT_EQ(bytes.size(), 9u);
    BitReader r(bytes);
    EXPECT_EQ(r.read_bits(1), 1u);
    EXPECT_EQ(r.read_bits(64), 0xFEDCBA9876543210ull);
}

TEST(BitReader, Peek) {
    const std::vector<std::uint8_t> data{0xE0};
    BitReader r(data);
    EXPECT_EQ(r.peek_bits(4), 0b1110u);
    EXPECT_EQ(r.cursor(), 0u);
    EXPECT_EQ(r.peek_bits(0), 0u);
    r.consume(7);
    EXPECT_EQ(r.peek_bits(4), 0u);  // one real zero bit then padding
}

TEST(BitReader, PeekPastEndIsZeroPadded) {
    const std::vector<std::uint8_t> data{0xFF};
    BitReader r(data);
    r.consume(5);
    EXPECT_EQ(r.peek_bits(6), 0b111000u);
    EXPECT_EQ(r.peek_bits(64), 0xE000000000000000ull);
}

TEST(BitReader, Consume) {
    const std::vector<std::uint8_t> data{0xE0};
    BitReader r(data);
    r.consume(5);
    EXPECT_EQ(r.cursor(), 5u);
    r.consume(0);
    EXPECT_EQ(r.cursor(), 5u);
    r.consume(2);
    EXPECT_EQ(r.cursor(), 7u);
    EXPECT_THROW(r.consume(2), CorruptStreamError);  // at the last bit
    EXPECT_EQ(r.cursor(), 7u);
}

TEST(BitIo, RoundTripRandomSequences) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::pair<std::uint64_t, unsigned>> writes;
        BitWriter w;
        std::uint64_t total = 0;
        const int count = static_cast<int>(rng() % 200);
        for (int i = 0; i < count; ++i) {
            const unsigned bits = static_cast<unsigned>(rng() % 65);
            const std::uint64_t value = bits == 0 ? 0 : (bits == 64 ? rng() : rng() & ((std::uint64_t{1} << bits) - 1));
            w.write_bits(value, bits);
            writes.emplace_back(value, bits);
            total += bits;
        }
        ASSERT_EQ(w.bit_count(), total);
        const auto bytes = w.finish();
        ASSERT_EQ(bytes.size(), (total + 7) / 8);
        BitReader r(bytes);
        for (const auto& [value, bits] : writes) ASSERT_EQ(r.read_bits(bits), value);
        // Anything left is zero padding.
        EXPECT_EQ(r.peek_bits(64), 0u);
    }
}

}  // namespace
}  // namespace swsc
