#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "swsc/errors.hpp"

namespace swsc {

inline constexpr std::uint64_t kMaxSigma = std::numeric_limits<std::uint32_t>::max();
inline constexpr std::uint64_t kMaxWindow = (std::uint64_t{1} << 31) - 1;

/// Shannon length of a character seen `freq` times in a window of `ell`:
/// the smallest j >= 0 with freq * 2^j >= ell, i.e. ceil(log2(ell / freq)),
/// evaluated in exact integer arithmetic.
constexpr unsigned codeword_length(std::uint64_t ell, std::uint64_t freq) {
    if (freq == 0) throw std::invalid_argument("codeword_length: frequency must be positive");
    const std::uint64_t q = (ell + freq - 1) / freq;  // ceil(ell / freq)
    return q <= 1 ? 0u : static_cast<unsigned>(std::bit_width(q - 1));
}

/// Every constant the encoder and decoder must agree on. Only `lambda` and `c`
/// are real-valued inputs; the rest are frozen integers, and only the frozen
/// integers travel in the stream header.
struct CoderParams {
    std::uint64_t sigma = 0;
    double lambda = 0.0;
    std::uint32_t c = 0;
    std::uint32_t ell = 0;
    std::uint32_t threshold = 0;
    unsigned l_max = 0;
    unsigned width = 0;

    friend bool operator==(const CoderParams&, const CoderParams&) = default;
};

namespace detail {

// ceil() that forgives representation error around exact integers, so that
// e.g. 64^(2/3) = 15.9999999... still yields the mathematically intended value.
inline std::uint64_t stable_ceil(long double x) {
    const long double nearest = std::round(x);
    if (std::fabs(x - nearest) <= 1e-12L * std::fmax(1.0L, std::fabs(x))) {
        return static_cast<std::uint64_t>(nearest);
    }
    return static_cast<std::uint64_t>(std::ceil(x));
}

}  // namespace detail

/// Checks the structural invariants of a frozen parameter set. Throws
/// ParameterError naming the first violation.
inline void validate(const CoderParams& p) {
    auto fail = [](const std::string& why) { throw ParameterError("invalid coder parameters: " + why); };
    if (p.sigma < 2 || p.sigma > kMaxSigma) fail("sigma out of range");
    if (p.width != static_cast<unsigned>(std::bit_width(p.sigma - 1))) fail("width != ceil(log2 sigma)");
    if (p.ell == 0 || p.ell > kMaxWindow) fail("window length out of range");
    if (p.threshold < 1 || p.threshold > p.ell) fail("threshold outside [1, ell]");
    if (p.l_max < 1 || p.l_max > p.width) fail("l_max outside [1, width]");
    // Lengths grow as frequency falls, so the threshold frequency has the longest code.
    if (codeword_length(p.ell, p.threshold) > p.l_max) fail("threshold codeword longer than l_max");
}

inline CoderParams derive_params(std::uint64_t sigma, double lambda, std::uint64_t c) {
    if (sigma < 2) throw ParameterError("sigma must be at least 2");
    if (sigma > kMaxSigma) throw ParameterError("sigma must fit in 32 bits");
    if (!(lambda >= 1.0) || !std::isfinite(lambda)) throw ParameterError("lambda must be a finite value >= 1");
    if (c < 1) throw ParameterError("c must be at least 1");
    if (c > std::numeric_limits<std::uint32_t>::max()) throw ParameterError("c must fit in 32 bits");

    const long double s = static_cast<long double>(sigma);
    const long double root = std::pow(s, 1.0L / static_cast<long double>(lambda));
    const long double lg = std::log2(s);

    const long double ell_real = static_cast<long double>(c) * root * lg;
    if (!(ell_real <= static_cast<long double>(kMaxWindow))) {
        throw ParameterError("window length exceeds 2^31-1; lower c or raise lambda");
    }

    CoderParams p;
    p.sigma = sigma;
    p.lambda = lambda;
    p.c = static_cast<std::uint32_t>(c);
    p.ell = static_cast<std::uint32_t>(detail::stable_ceil(ell_real));
    p.threshold = static_cast<std::uint32_t>(detail::stable_ceil(static_cast<long double>(p.ell) / root));
    p.width = static_cast<unsigned>(std::bit_width(sigma - 1));
    p.l_max = static_cast<unsigned>(detail::stable_ceil(lg / static_cast<long double>(lambda)));
    if (p.l_max > p.width) p.l_max = p.width;
    if (p.l_max == 0) p.l_max = 1;

    // Rounding may leave the threshold one short of guaranteeing lengths <= l_max.
    while (p.threshold < p.ell && codeword_length(p.ell, p.threshold) > p.l_max) ++p.threshold;

    validate(p);
    return p;
}

}  // namespace swsc
