#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swsc/errors.hpp"

namespace swsc {

// Raw symbol files: fixed-width little-endian unsigned integers, 1, 2 or 4
// bytes per symbol.

inline void check_symbol_bytes(unsigned bytes) {
    if (bytes != 1 && bytes != 2 && bytes != 4) throw std::invalid_argument("symbol width must be 1, 2 or 4 bytes");
}

inline std::vector<std::uint8_t> pack_symbols(std::span<const Symbol> symbols, unsigned bytes) {
    check_symbol_bytes(bytes);
    std::vector<std::uint8_t> out;
    out.reserve(symbols.size() * bytes);
    const std::uint64_t limit = std::uint64_t{1} << (8 * bytes);
    for (const Symbol a : symbols) {
        if (a >= limit) throw std::out_of_range("symbol " + std::to_string(a) + " does not fit in " + std::to_string(bytes) + " bytes");
        for (unsigned b = 0; b < bytes; ++b) out.push_back(static_cast<std::uint8_t>(a >> (8 * b)));
    }
    return out;
}

inline std::vector<Symbol> unpack_symbols(std::span<const std::uint8_t> raw, unsigned bytes) {
    check_symbol_bytes(bytes);
    if (raw.size() % bytes != 0) {
        throw std::invalid_argument("input length " + std::to_string(raw.size()) + " is not a multiple of " +
                                    std::to_string(bytes) + " bytes");
    }
    std::vector<Symbol> out(raw.size() / bytes);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Symbol a = 0;
        for (unsigned b = 0; b < bytes; ++b) a |= Symbol{raw[i * bytes + b]} << (8 * b);
        out[i] = a;
    }
    return out;
}

}  // namespace swsc
