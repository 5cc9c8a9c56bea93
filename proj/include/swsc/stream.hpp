#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swsc/bitio.hpp"
#include "swsc/dictionary.hpp"
#include "swsc/errors.hpp"
#include "swsc/params.hpp"
#include "swsc/sliding_coder.hpp"

namespace swsc {

// Encoded file layout, all integers little-endian:
//
//   offset size field
//        0    4 magic "SWSC"
//        4    1 version (1)
//        5    1 backend (0 trie, 1 hashed; informational)
//        6    4 sigma
//       10    4 ell
//       14    4 threshold
//       18    1 l_max
//       19    1 width
//       20    8 n (symbol count)
//       28    8 lambda as IEEE-754 binary64 bits (informational)
//       36    4 c (informational)
//       40      MSB-first payload, zero padded to a byte boundary
struct StreamHeader {
    static constexpr std::array<std::uint8_t, 4> kMagic{'S', 'W', 'S', 'C'};
    static constexpr std::uint8_t kVersion = 1;
    static constexpr std::size_t kSize = 40;

    Backend backend = Backend::trie;
    std::uint32_t sigma = 0;
    std::uint32_t ell = 0;
    std::uint32_t threshold = 0;
    std::uint8_t l_max = 0;
    std::uint8_t width = 0;
    std::uint64_t n = 0;
    std::uint64_t lambda_bits = 0;
    std::uint32_t c = 0;

    static StreamHeader from(const CoderParams& p, Backend backend, std::uint64_t n) {
        StreamHeader h;
        h.backend = backend;
        h.sigma = static_cast<std::uint32_t>(p.sigma);
        h.ell = p.ell;
        h.threshold = p.threshold;
        h.l_max = static_cast<std::uint8_t>(p.l_max);
        h.width = static_cast<std::uint8_t>(p.width);
        h.n = n;
        h.lambda_bits = std::bit_cast<std::uint64_t>(p.lambda);
        h.c = p.c;
        return h;
    }

    /// Frozen parameters as carried by the header; lambda and c are display-only.
    CoderParams params() const {
        CoderParams p;
        p.sigma = sigma;
        p.lambda = std::bit_cast<double>(lambda_bits);
        p.c = c;
        p.ell = ell;
        p.threshold = threshold;
        p.l_max = l_max;
        p.width = width;
        return p;
    }

    void serialize(std::vector<std::uint8_t>& out) const {
        out.insert(out.end(), kMagic.begin(), kMagic.end());
        out.push_back(kVersion);
        out.push_back(static_cast<std::uint8_t>(backend));
        put_le(out, sigma, 4);
        put_le(out, ell, 4);
        put_le(out, threshold, 4);
        out.push_back(l_max);
        out.push_back(width);
        put_le(out, n, 8);
        put_le(out, lambda_bits, 8);
        put_le(out, c, 4);
    }

    /// Parses and validates a header. Any defect is reported as a corrupt stream.
    static StreamHeader parse(std::span<const std::uint8_t> in) {
        if (in.size() < kSize) throw CorruptStreamError("stream shorter than its header");
        if (!std::equal(kMagic.begin(), kMagic.end(), in.begin())) throw CorruptStreamError("bad magic");
        if (in[4] != kVersion) throw CorruptStreamError("unsupported version " + std::to_string(in[4]));
        if (in[5] > 1) throw CorruptStreamError("unknown backend flag");
        StreamHeader h;
        h.backend = static_cast<Backend>(in[5]);
        h.sigma = static_cast<std::uint32_t>(get_le(in, 6, 4));
        h.ell = static_cast<std::uint32_t>(get_le(in, 10, 4));
        h.threshold = static_cast<std::uint32_t>(get_le(in, 14, 4));
        h.l_max = in[18];
        h.width = in[19];
        h.n = get_le(in, 20, 8);
        h.lambda_bits = get_le(in, 28, 8);
        h.c = static_cast<std::uint32_t>(get_le(in, 36, 4));
        try {
            validate(h.params());
        } catch (const ParameterError& e) {
            throw CorruptStreamError(std::string("header: ") + e.what());
        }
        return h;
    }

    friend bool operator==(const StreamHeader&, const StreamHeader&) = default;

private:
    static void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned bytes) {
        for (unsigned i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    static std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t at, unsigned bytes) {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < bytes; ++i) v |= std::uint64_t{in[at + i]} << (8 * i);
        return v;
    }
};

struct CoderOptions {
    Backend backend = Backend::trie;
    double trie_eps = 0.5;
    std::uint64_t hash_seed = 0x9E3779B97F4A7C15ull;
};

struct EncodeReport {
    std::uint64_t n = 0;
    std::uint64_t payload_bits = 0;
    std::uint64_t literal_count = 0;
    std::uint64_t coded_count = 0;
    std::size_t max_codebook_size = 0;
    // Partial-sums instrumentation.
    std::uint64_t ps_touches = 0;
    std::uint64_t ps_touches_max_step = 0;
    std::uint64_t cost_units = 0;  // sum over symbols of (1 + codeword or literal length)
};

struct DecodeReport {
    std::uint64_t n = 0;
    std::uint64_t payload_bits = 0;  // bits consumed, excluding padding
    std::uint64_t literal_count = 0;
    std::uint64_t coded_count = 0;
    std::uint64_t ps_touches = 0;
    std::uint64_t ps_touches_max_step = 0;
};

struct EncodedStream {
    std::vector<std::uint8_t> bytes;
    EncodeReport report;
};

struct DecodedStream {
    StreamHeader header;
    std::vector<Symbol> symbols;
    DecodeReport report;
};

/// Builds the dictionary selected by `opt` and hands it to `fn`.
template <class Fn>
decltype(auto) with_dictionary(const CoderOptions& opt, std::uint64_t sigma, Fn&& fn) {
    if (opt.backend == Backend::trie) return fn(TrieDictionary(sigma, opt.trie_eps));
    return fn(HashedDictionary(sigma, opt.hash_seed));
}

template <WindowDictionary Dict>
EncodedStream encode_with(CoderState<Dict>& state, Backend flag, std::span<const Symbol> symbols) {
    const CoderParams& p = state.params();
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] >= p.sigma) {
            throw std::out_of_range("symbol " + std::to_string(symbols[i]) + " at position " + std::to_string(i) +
                                    " outside alphabet of size " + std::to_string(p.sigma));
        }
    }
    EncodedStream result;
    StreamHeader::from(p, flag, symbols.size()).serialize(result.bytes);

    EncodeReport& rep = result.report;
    BitWriter out;
    for (const Symbol a : symbols) {
        const std::uint64_t before = state.partial_sum_touches();
        const unsigned bits = state.encode(a, out);
        const std::uint64_t step = state.partial_sum_touches() - before;
        rep.ps_touches += step;
        rep.ps_touches_max_step = std::max(rep.ps_touches_max_step, step);
        rep.cost_units += bits;
        rep.max_codebook_size = std::max(rep.max_codebook_size, state.codebook().size());
    }
    rep.n = symbols.size();
    rep.literal_count = state.literal_count();
    rep.coded_count = state.coded_count();
    rep.payload_bits = out.bit_count();
    const auto payload = out.finish();
    result.bytes.insert(result.bytes.end(), payload.begin(), payload.end());
    return result;
}

inline EncodedStream encode_stream(const CoderParams& params, std::span<const Symbol> symbols,
                                   const CoderOptions& opt = {}) {
    return with_dictionary(opt, params.sigma, [&](auto dict) {
        CoderState state(params, std::move(dict));
        return encode_with(state, opt.backend, symbols);
    });
}

inline DecodedStream decode_stream(std::span<const std::uint8_t> bytes, const CoderOptions& opt = {}) {
    DecodedStream result;
    result.header = StreamHeader::parse(bytes);
    const CoderParams params = result.header.params();
    const std::uint64_t n = result.header.n;
    BitReader in(bytes.subspan(StreamHeader::kSize));

    CoderOptions local = opt;
    local.backend = result.header.backend;
    with_dictionary(local, params.sigma, [&](auto dict) {
        CoderState state(params, std::move(dict));
        DecodeReport& rep = result.report;
        // Every symbol costs at least one bit, so a lying header cannot force a huge reservation.
        result.symbols.reserve(static_cast<std::size_t>(std::min(n, in.total_bits())));
        for (std::uint64_t i = 0; i < n; ++i) {
            const std::uint64_t before_touch = state.partial_sum_touches();
            try {
                result.symbols.push_back(state.decode(in));
            } catch (const CorruptStreamError& e) {
                throw CorruptStreamError(e.what(), i);
            }
            const std::uint64_t step = state.partial_sum_touches() - before_touch;
            rep.ps_touches += step;
            rep.ps_touches_max_step = std::max(rep.ps_touches_max_step, step);
        }
        rep.n = n;
        rep.literal_count = state.literal_count();
        rep.coded_count = state.coded_count();
        rep.payload_bits = in.cursor();
    });
    return result;
}

}  // namespace swsc
