#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "swsc/errors.hpp"

namespace swsc {

// MSB-first bit writer into an owned byte buffer. The final partial byte is
// zero padded by finish().
class BitWriter {
public:
    BitWriter() = default;

    void write_bits(std::uint64_t value, unsigned count) {
        if (count > 64) throw std::invalid_argument("write_bits: count > 64");
        if (count < 64 && (value >> count) != 0) throw std::invalid_argument("write_bits: value wider than count");
        if (count > 32) {
            put(value >> 32, count - 32);
            put(value & 0xFFFFFFFFu, 32);
        } else {
            put(value, count);
        }
    }

    void write_bit(bool bit) { put(bit ? 1u : 0u, 1); }

    std::uint64_t bit_count() const noexcept { return bytes_.size() * 8 + pending_; }

    /// Flushes the pad byte and hands back the buffer; the writer is left empty.
    std::vector<std::uint8_t> finish() {
        if (pending_ > 0) {
            bytes_.push_back(static_cast<std::uint8_t>(acc_ << (8 - pending_)));
            acc_ = 0;
            pending_ = 0;
        }
        return std::move(bytes_);
    }

private:
    // count <= 32 and pending_ < 8, so acc_ never overflows.
    void put(std::uint64_t value, unsigned count) {
        acc_ = (acc_ << count) | value;
        pending_ += count;
        while (pending_ >= 8) {
            pending_ -= 8;
            bytes_.push_back(static_cast<std::uint8_t>(acc_ >> pending_));
        }
        acc_ &= (std::uint64_t{1} << pending_) - 1;
    }

    std::vector<std::uint8_t> bytes_;
    std::uint64_t acc_ = 0;
    unsigned pending_ = 0;
};

// MSB-first reader with lookahead. Bits past the end of data read as zero,
// matching the writer's padding; consuming them is an error.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> data) noexcept : data_(data) {}

    std::uint64_t peek_bits(unsigned count) const {
        if (count > 64) throw std::invalid_argument("peek_bits: count > 64");
        if (count == 0) return 0;
        const std::size_t byte = static_cast<std::size_t>(cursor_ >> 3);
        const unsigned offset = static_cast<unsigned>(cursor_ & 7);

        std::uint64_t window = 0;
        for (std::size_t i = 0; i < 8; ++i) window = (window << 8) | byte_at(byte + i);
        std::uint64_t aligned = window << offset;
        if (count > 64 - offset) aligned |= static_cast<std::uint64_t>(byte_at(byte + 8)) >> (8 - offset);
        return aligned >> (64 - count);
    }

    void consume(std::uint64_t count) {
        if (count > total_bits() - cursor_) throw CorruptStreamError("bit stream ended early");
        cursor_ += count;
    }

    std::uint64_t read_bits(unsigned count) {
        const std::uint64_t v = peek_bits(count);
        consume(count);
        return v;
    }

    std::uint64_t cursor() const noexcept { return cursor_; }
    std::uint64_t total_bits() const noexcept { return static_cast<std::uint64_t>(data_.size()) * 8; }

private:
    std::uint8_t byte_at(std::size_t i) const noexcept { return i < data_.size() ? data_[i] : 0; }

    std::span<const std::uint8_t> data_;
    std::uint64_t cursor_ = 0;
};

}  // namespace swsc
