#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "swsc/errors.hpp"

namespace swsc {

// Synthetic corpora for benchmarks and tests.
//
// Randomness comes only from the raw 64-bit output of std::mt19937_64, whose
// sequence is fixed by the C++ standard for a given seed; the mapping to
// integers and reals below is spelled out here rather than left to the
// library's distribution objects, so a seed names the same corpus everywhere.

enum class Distribution { uniform, zipf, markov };

inline std::optional<Distribution> parse_distribution(std::string_view s) noexcept {
    if (s == "uniform") return Distribution::uniform;
    if (s == "zipf") return Distribution::zipf;
    if (s == "markov") return Distribution::markov;
    return std::nullopt;
}

inline std::string_view to_string(Distribution d) noexcept {
    switch (d) {
        case Distribution::uniform: return "uniform";
        case Distribution::zipf: return "zipf";
        default: return "markov";
    }
}

struct CorpusSpec {
    Distribution dist = Distribution::uniform;
    std::uint64_t sigma = 256;
    std::uint64_t n = 0;
    std::uint64_t seed = 1;
    double zipf_s = 1.0;      // exponent for zipf, and for each markov state
    unsigned states = 8;      // markov only
    double stickiness = 0.9;  // markov: probability of staying in the current state
};

inline constexpr std::uint64_t kMaxSkewedSigma = std::uint64_t{1} << 24;

class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound) by rejection, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t reject_under = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t x;
        do x = engine_(); while (x < reject_under);
        return x % bound;
    }

    /// Uniform real in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// Ranks 1..size drawn with probability proportional to rank^-s, by inverse CDF.
class ZipfTable {
public:
    ZipfTable(std::uint64_t size, double s) : cdf_(size) {
        double acc = 0.0;
        for (std::uint64_t r = 0; r < size; ++r) {
            acc += std::pow(static_cast<double>(r + 1), -s);
            cdf_[r] = acc;
        }
        for (double& v : cdf_) v /= acc;
        cdf_.back() = 1.0;
    }

    /// Zero-based rank.
    std::uint64_t sample(PortableRng& rng) const {
        const double u = rng.unit();
        return static_cast<std::uint64_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
    }

private:
    std::vector<double> cdf_;
};

/// Generates spec.n symbols below spec.sigma.
///
/// markov: `states` hidden states, each a zipf source over the alphabet
/// rotated by state * floor(sigma / states). After every symbol the chain
/// stays put with probability `stickiness`, otherwise jumps to a uniformly
/// chosen state (possibly the same one).
inline std::vector<Symbol> generate_corpus(const CorpusSpec& spec) {
    if (spec.sigma < 2 || spec.sigma > (std::uint64_t{1} << 32) - 1) throw ParameterError("gen: sigma out of range");
    if (spec.dist != Distribution::uniform && spec.sigma > kMaxSkewedSigma) {
        throw ParameterError("gen: skewed distributions support sigma <= 2^24");
    }
    if (!(spec.zipf_s >= 0.0) || !std::isfinite(spec.zipf_s)) throw ParameterError("gen: zipf exponent must be >= 0");
    if (spec.dist == Distribution::markov) {
        if (spec.states == 0) throw ParameterError("gen: markov needs at least one state");
        if (!(spec.stickiness >= 0.0 && spec.stickiness <= 1.0)) throw ParameterError("gen: stickiness must lie in [0, 1]");
    }

    PortableRng rng(spec.seed);
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(spec.n));

    switch (spec.dist) {
        case Distribution::uniform:
            for (std::uint64_t i = 0; i < spec.n; ++i) out.push_back(static_cast<Symbol>(rng.below(spec.sigma)));
            break;
        case Distribution::zipf: {
            const ZipfTable table(spec.sigma, spec.zipf_s);
            for (std::uint64_t i = 0; i < spec.n; ++i) out.push_back(static_cast<Symbol>(table.sample(rng)));
            break;
        }
        case Distribution::markov: {
            const ZipfTable table(spec.sigma, spec.zipf_s);
            const std::uint64_t stride = spec.sigma / spec.states;
            std::uint64_t state = 0;
            for (std::uint64_t i = 0; i < spec.n; ++i) {
                const std::uint64_t rank = table.sample(rng);
                out.push_back(static_cast<Symbol>((rank + state * stride) % spec.sigma));
                if (rng.unit() >= spec.stickiness) state = rng.below(spec.states);
            }
            break;
        }
    }
    return out;
}

}  // namespace swsc
