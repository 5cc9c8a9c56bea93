#pragma once

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swsc/bitio.hpp"
#include "swsc/codebook.hpp"
#include "swsc/dictionary.hpp"
#include "swsc/errors.hpp"
#include "swsc/params.hpp"

namespace swsc {

/// Smallest of {1, 2, 4} bytes that can hold every symbol below sigma.
constexpr unsigned symbol_bytes_for(std::uint64_t sigma) noexcept {
    if (sigma <= 0x100) return 1;
    if (sigma <= 0x10000) return 2;
    return 4;
}

/// Ring buffer holding the last `capacity` symbols, each stored in the
/// narrowest integer that covers the alphabet.
class Window {
public:
    Window(std::uint32_t capacity, unsigned symbol_bytes)
        : bytes_per_(symbol_bytes), capacity_(capacity), buf_(std::size_t{capacity} * symbol_bytes) {
        if (capacity == 0) throw std::invalid_argument("Window: capacity must be positive");
        if (symbol_bytes != 1 && symbol_bytes != 2 && symbol_bytes != 4) {
            throw std::invalid_argument("Window: symbol width must be 1, 2 or 4 bytes");
        }
    }

    /// Appends a symbol; once full, returns the symbol that fell out.
    std::optional<Symbol> push(Symbol a) {
        if (size_ < capacity_) {
            store((head_ + size_) % capacity_, a);
            ++size_;
            return std::nullopt;
        }
        const Symbol evicted = load(head_);
        store(head_, a);
        head_ = head_ + 1 == capacity_ ? 0 : head_ + 1;
        return evicted;
    }

    std::uint32_t size() const noexcept { return size_; }
    std::uint32_t capacity() const noexcept { return capacity_; }
    bool full() const noexcept { return size_ == capacity_; }

    /// i-th oldest symbol still in the window.
    Symbol at(std::uint32_t i) const {
        if (i >= size_) throw std::out_of_range("Window::at");
        const std::uint64_t slot = std::uint64_t{head_} + i;
        return load(static_cast<std::uint32_t>(slot % capacity_));
    }

    std::vector<Symbol> contents() const {
        std::vector<Symbol> out(size_);
        for (std::uint32_t i = 0; i < size_; ++i) out[i] = at(i);
        return out;
    }

    std::size_t memory_bytes() const noexcept { return sizeof(*this) + buf_.capacity(); }

private:
    Symbol load(std::uint32_t slot) const noexcept {
        const std::uint8_t* p = buf_.data() + std::size_t{slot} * bytes_per_;
        switch (bytes_per_) {
            case 1: return p[0];
            case 2: return static_cast<Symbol>(p[0] | (p[1] << 8));
            default: return static_cast<Symbol>(p[0] | (p[1] << 8) | (p[2] << 16) | (std::uint32_t{p[3]} << 24));
        }
    }

    void store(std::uint32_t slot, Symbol a) noexcept {
        std::uint8_t* p = buf_.data() + std::size_t{slot} * bytes_per_;
        for (unsigned b = 0; b < bytes_per_; ++b) p[b] = static_cast<std::uint8_t>(a >> (8 * b));
    }

    unsigned bytes_per_;
    std::uint32_t capacity_;
    std::uint32_t head_ = 0;
    std::uint32_t size_ = 0;
    std::vector<std::uint8_t> buf_;
};

/// Complete coder state shared, step for step, by encoder and decoder.
///
/// A character is "frequent" while it occurs at least `threshold` times in
/// the window; frequent characters carry a codeword of length
/// codeword_length(ell, freq), everything else is sent as a literal.
template <WindowDictionary Dict>
class CoderState {
public:
    CoderState(const CoderParams& params, Dict dict)
        : params_(params),
          window_(params.ell, symbol_bytes_for(params.sigma)),
          dict_(std::move(dict)),
          codebook_(params.l_max) {
        validate(params_);
    }

    const CoderParams& params() const noexcept { return params_; }
    const Window& window() const noexcept { return window_; }
    const Dict& dictionary() const noexcept { return dict_; }
    const Codebook& codebook() const noexcept { return codebook_; }
    std::uint64_t position() const noexcept { return position_; }

    /// Writes the flag bit and either the codeword or the width-bit literal,
    /// then advances the state. Returns the number of bits written.
    unsigned encode(Symbol a, BitWriter& out) {
        detail::check_symbol(a, params_.sigma);
        const CodeRecord* rec = dict_.find(a);
        unsigned bits;
        if (rec != nullptr && rec->is_coded()) {
            const Codeword cw = codebook_.codeword(rec->length, std::size_t{rec->index} + 1);
            out.write_bit(true);
            out.write_bits(cw.value, cw.length);
            bits = 1 + cw.length;
            ++coded_;
        } else {
            out.write_bit(false);
            out.write_bits(a, params_.width);
            bits = 1 + params_.width;
            ++literals_;
        }
        update(a);
        return bits;
    }

    Symbol decode(BitReader& in) {
        Symbol a;
        if (in.read_bits(1) == 0) {
            const std::uint64_t v = in.read_bits(params_.width);
            if (v >= params_.sigma) throw CorruptStreamError("literal outside the alphabet");
            a = static_cast<Symbol>(v);
            ++literals_;
        } else {
            const auto hit = codebook_.decode(in.peek_bits(params_.l_max));
            in.consume(hit.length);
            a = hit.symbol;
            ++coded_;
        }
        update(a);
        return a;
    }

    /// Slides the window over `a` and repairs dictionary and code.
    ///
    /// Both frequencies are brought up to date first (arrival, then
    /// eviction), then the evicted character's code entry is repaired, then
    /// a's. When the two coincide the frequency is unchanged and both repairs
    /// find nothing to do.
    void update(Symbol a) {
        detail::check_symbol(a, params_.sigma);
        const std::optional<Symbol> evicted = window_.push(a);
        if (CodeRecord* rec = dict_.find(a)) {
            ++rec->freq;
        } else {
            dict_.put(a, CodeRecord::literal(1));
        }
        if (evicted) {
            CodeRecord* rec = dict_.find(*evicted);
            if (rec == nullptr) throw InternalError("evicted symbol missing from dictionary");
            if (rec->freq == 1) {
                // Last occurrence leaves the window; a zero count is never stored.
                if (rec->is_coded()) codebook_.remove(*evicted, dict_);
                dict_.erase(*evicted);
            } else {
                --rec->freq;
                settle_evicted(*evicted);
            }
        }
        settle_arrival(a);

        if (codebook_.kraft_total() > (std::uint64_t{1} << params_.l_max)) {
            throw InternalError("Kraft sum exceeds 1 after update");
        }
        ++position_;
    }

    std::uint64_t partial_sum_touches() const noexcept { return codebook_.kraft().touches(); }
    std::uint64_t literal_count() const noexcept { return literals_; }
    std::uint64_t coded_count() const noexcept { return coded_; }

private:
    void settle_evicted(Symbol e) {
        CodeRecord* rec = dict_.find(e);
        if (!rec->is_coded()) return;
        const std::uint32_t f = rec->freq;
        if (f < params_.threshold) {
            codebook_.remove(e, dict_);
            return;
        }
        const unsigned j = codeword_length(params_.ell, f);
        if (j > rec->length) {
            if (j > params_.l_max) throw InternalError("frequent symbol demoted past l_max");
            codebook_.move(e, j, dict_);
        }
    }

    void settle_arrival(Symbol a) {
        const CodeRecord* rec = dict_.find(a);
        if (rec->freq < params_.threshold) return;
        const unsigned j = codeword_length(params_.ell, rec->freq);
        if (!rec->is_coded()) {
            codebook_.insert(a, j, dict_);
        } else if (j < rec->length) {
            codebook_.move(a, j, dict_);
        }
    }

    CoderParams params_;
    Window window_;
    Dict dict_;
    Codebook codebook_;
    std::uint64_t position_ = 0;
    std::uint64_t literals_ = 0;
    std::uint64_t coded_ = 0;
};

}  // namespace swsc
