#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "swsc/codebook.hpp"
#include "swsc/dictionary.hpp"
#include "swsc/params.hpp"
#include "swsc/sliding_coder.hpp"
#include "swsc/stream.hpp"

namespace swsc {

/// Zeroth-order empirical entropy in bits per symbol,
/// sum over f > 0 of (f/n) log2(n/f). Zero for n <= 1.
inline double entropy(std::span<const std::uint64_t> counts, std::uint64_t n) {
    if (n <= 1) return 0.0;
    const double total = static_cast<double>(n);
    double h = 0.0;
    for (const std::uint64_t f : counts) {
        if (f == 0) continue;
        const double fd = static_cast<double>(f);
        h += fd * std::log2(total / fd);
    }
    return h / total;
}

struct EntropyStats {
    std::uint64_t n = 0;
    std::uint64_t distinct = 0;
    std::map<Symbol, std::uint64_t> counts;
    double h0 = 0.0;
};

inline EntropyStats entropy_stats(std::span<const Symbol> symbols) {
    EntropyStats st;
    st.n = symbols.size();
    std::unordered_map<Symbol, std::uint64_t> tally;
    for (const Symbol a : symbols) ++tally[a];
    st.counts.insert(tally.begin(), tally.end());
    st.distinct = st.counts.size();
    std::vector<std::uint64_t> flat;
    flat.reserve(st.counts.size());
    for (const auto& [sym, f] : st.counts) flat.push_back(f);
    st.h0 = entropy(flat, st.n);
    return st;
}

/// Redundancy term 2 lambda (log2 c + 3) / c from the window-size analysis.
inline double delta_for(std::uint32_t c, double lambda) {
    return 2.0 * lambda * (std::log2(static_cast<double>(c)) + 3.0) / static_cast<double>(c);
}

/// Concrete encoding-length bound
///
///   lambda n H + (lambda ln2 + 2 + delta) n + 2 ell (lambda log2 sigma + lambda ln2 + 2 + delta)
///
/// where the last term covers the final, partial block of ell symbols
/// (charged twice).
struct BoundReport {
    double lambda = 0.0;
    std::uint32_t c = 0;
    std::uint64_t n = 0;
    double h0 = 0.0;
    double delta = 0.0;
    double main_term = 0.0;
    double linear_term = 0.0;
    double remainder = 0.0;
    double bound = 0.0;
    std::uint64_t measured_bits = 0;
    double slack = 0.0;
};

inline BoundReport encoding_length_bound(std::uint64_t n, double h0, const CoderParams& p) {
    constexpr double ln2 = std::numbers::ln2;
    BoundReport r;
    r.lambda = p.lambda;
    r.c = p.c;
    r.n = n;
    r.h0 = h0;
    r.delta = delta_for(p.c, p.lambda);
    const double per_symbol = p.lambda * ln2 + 2.0 + r.delta;
    r.main_term = p.lambda * static_cast<double>(n) * h0;
    r.linear_term = per_symbol * static_cast<double>(n);
    r.remainder = 2.0 * static_cast<double>(p.ell) * (p.lambda * std::log2(static_cast<double>(p.sigma)) + per_symbol);
    r.bound = r.main_term + r.linear_term + r.remainder;
    r.slack = r.bound;
    return r;
}

struct BoundCheck {
    BoundReport report;
    bool applicable = false;  // the bound is only claimed once n >= ell
    bool pass = false;
};

/// Payload bits (header excluded) against the bound. The comparison grants a
/// 1e-6 n guard band for rounding in the floating-point bound.
inline BoundCheck check_bound(const EncodeReport& enc, const EntropyStats& stats, const CoderParams& p) {
    BoundCheck out;
    out.report = encoding_length_bound(stats.n, stats.h0, p);
    out.report.measured_bits = enc.payload_bits;
    out.report.slack = out.report.bound - static_cast<double>(enc.payload_bits);
    out.applicable = stats.n >= p.ell;
    const double guard = 1e-6 * static_cast<double>(stats.n);
    out.pass = static_cast<double>(enc.payload_bits) < out.report.bound + guard;
    return out;
}

/// What the incremental state must look like for a given window, recomputed
/// from scratch by counting.
struct OracleState {
    std::map<Symbol, std::uint32_t> freq;
    std::map<Symbol, unsigned> coded_length;  // frequent symbols only
    std::vector<std::size_t> class_counts;    // C[0..l_max]
};

inline OracleState oracle_state(std::span<const Symbol> window, const CoderParams& p) {
    OracleState o;
    for (const Symbol a : window) ++o.freq[a];
    o.class_counts.assign(p.l_max + 1, 0);
    for (const auto& [a, f] : o.freq) {
        if (f < p.threshold) continue;
        // Independent of codeword_length(): walk the doublings directly.
        unsigned j = 0;
        while (std::uint64_t{f} << j < p.ell) ++j;
        o.coded_length[a] = j;
        if (j < o.class_counts.size()) ++o.class_counts[j];
    }
    return o;
}

struct OracleMismatch {
    std::size_t frequency = 0;   // dictionary frequency differs from recount
    std::size_t membership = 0;  // coded set differs from {f >= threshold}
    std::size_t length = 0;      // stored length differs from recomputed length
    std::size_t histogram = 0;   // C[j] differs
    std::size_t offsets = 0;     // list position disagrees with dictionary record

    std::size_t total() const noexcept { return frequency + membership + length + histogram + offsets; }
};

/// Compares a live coder state against the from-scratch recount of its window.
template <WindowDictionary Dict>
OracleMismatch compare_with_oracle(const CoderState<Dict>& st) {
    const CoderParams& p = st.params();
    const std::vector<Symbol> window = st.window().contents();
    const OracleState o = oracle_state(window, p);
    const Codebook& cb = st.codebook();
    const Dict& dict = st.dictionary();

    OracleMismatch m;
    if (dict.size() != o.freq.size()) ++m.frequency;
    for (const auto& [a, f] : o.freq) {
        const auto rec = dict.get(a);
        if (!rec || rec->freq != f) {
            ++m.frequency;
            continue;
        }
        const auto want = o.coded_length.find(a);
        if ((want != o.coded_length.end()) != rec->is_coded()) {
            ++m.membership;
        } else if (rec->is_coded() && rec->length != want->second) {
            ++m.length;
        }
    }
    for (unsigned j = 0; j <= p.l_max; ++j) {
        if (cb.count(j) != o.class_counts[j]) ++m.histogram;
        const auto& list = cb.list(j);
        for (std::size_t k = 0; k < list.size(); ++k) {
            const auto rec = dict.get(list[k]);
            if (!rec || rec->length != j || rec->index != k) ++m.offsets;
        }
    }
    return m;
}

struct MemoryReport {
    std::size_t window = 0;
    std::size_t dictionary = 0;
    std::size_t codebook = 0;
    std::size_t partial_sums = 0;
    std::size_t total = 0;
};

template <WindowDictionary Dict>
MemoryReport memory_audit(const CoderState<Dict>& st) {
    MemoryReport r;
    r.window = st.window().memory_bytes();
    r.dictionary = st.dictionary().memory_bytes();
    r.codebook = st.codebook().memory_bytes();
    r.partial_sums = st.codebook().kraft().memory_bytes();
    r.total = r.window + r.dictionary + r.codebook + r.partial_sums;
    return r;
}

/// Footprint of the linear-space alternative: one 32-bit counter per
/// alphabet symbol.
constexpr std::size_t naive_table_bytes(std::uint64_t sigma) noexcept {
    return static_cast<std::size_t>(sigma) * sizeof(std::uint32_t);
}

}  // namespace swsc
