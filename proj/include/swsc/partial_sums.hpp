#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace swsc {

/// Searchable partial sums over k nonnegative integer entries p_1..p_k.
///
/// Binary-indexed tree. prefix(), add() and search() each visit at most
/// floor(log2 k) + 1 tree nodes; every visit is counted in touches() so that
/// callers can audit the per-operation work.
class PartialSums {
public:
    explicit PartialSums(std::size_t k) : tree_(k + 1, 0), values_(k, 0) {
        if (k == 0) throw std::invalid_argument("PartialSums: k must be >= 1");
        top_ = std::bit_floor(k);
    }

    std::size_t size() const noexcept { return values_.size(); }

    /// Adds delta to p_i (1-based). The resulting entry must stay nonnegative.
    void add(std::size_t i, std::int64_t delta) {
        if (i < 1 || i > size()) throw std::out_of_range("PartialSums::add: index out of range");
        if (delta < 0 && static_cast<std::uint64_t>(-delta) > values_[i - 1]) {
            throw std::invalid_argument("PartialSums::add: entry would become negative");
        }
        values_[i - 1] += static_cast<std::uint64_t>(delta);
        for (std::size_t n = size(); i <= n; i += i & (~i + 1)) {
            tree_[i] += static_cast<std::uint64_t>(delta);
            ++touches_;
        }
    }

    /// p_1 + ... + p_i; prefix(0) == 0.
    std::uint64_t prefix(std::size_t i) const {
        if (i > size()) throw std::out_of_range("PartialSums::prefix: index out of range");
        std::uint64_t sum = 0;
        for (; i > 0; i &= i - 1) {
            sum += tree_[i];
            ++touches_;
        }
        return sum;
    }

    struct SearchResult {
        std::size_t index;    // largest i with prefix(i) <= bound
        std::uint64_t prefix; // prefix(index)
    };

    /// Largest i in [0, k] with prefix(i) <= bound. Zero entries extend a run
    /// of equal prefixes, and the last index of the run is returned.
    SearchResult search(std::uint64_t bound) const {
        std::size_t pos = 0;
        std::uint64_t sum = 0;
        for (std::size_t step = top_; step > 0; step >>= 1) {
            const std::size_t next = pos + step;
            if (next > size()) continue;
            ++touches_;
            if (sum + tree_[next] <= bound) {
                pos = next;
                sum += tree_[next];
            }
        }
        return {pos, sum};
    }

    std::uint64_t value(std::size_t i) const {
        if (i < 1 || i > size()) throw std::out_of_range("PartialSums::value: index out of range");
        return values_[i - 1];
    }

    std::uint64_t total() const { return prefix(size()); }

    std::uint64_t touches() const noexcept { return touches_; }

    std::size_t memory_bytes() const noexcept {
        return sizeof(*this) + (tree_.capacity() + values_.capacity()) * sizeof(std::uint64_t);
    }

private:
    std::vector<std::uint64_t> tree_;
    std::vector<std::uint64_t> values_;
    std::size_t top_ = 1;
    mutable std::uint64_t touches_ = 0;
};

}  // namespace swsc
