#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "swsc/params.hpp"

namespace swsc {
namespace {

// Reference: try lengths in order until the doubled frequency covers the window.
unsigned brute_length(std::uint64_t ell, std::uint64_t f) {
    unsigned j = 0;
    while ((f << j) < ell) ++j;
    return j;
}

TEST(CodewordLength, Examples) {
    EXPECT_EQ(codeword_length(1280, 1280), 0u);
    EXPECT_EQ(codeword_length(1280, 80), 4u);
    EXPECT_EQ(codeword_length(1280, 321), 2u);
}

TEST(CodewordLength, MatchesBruteForce) {
    for (std::uint64_t ell = 1; ell <= 600; ++ell) {
        for (std::uint64_t f = 1; f <= ell; ++f) {
            ASSERT_EQ(codeword_length(ell, f), brute_length(ell, f)) << "ell=" << ell << " f=" << f;
        }
    }
}

TEST(CodewordLength, ZeroFrequencyIsContractViolation) {
    EXPECT_THROW(codeword_length(10, 0), std::invalid_argument);
}

TEST(DeriveParams, Examples) {
    const CoderParams a = derive_params(256, 2.0, 10);
    EXPECT_EQ(a.ell, 1280u);
    EXPECT_EQ(a.threshold, 80u);
    EXPECT_EQ(a.l_max, 4u);
    EXPECT_EQ(a.width, 8u);

    const CoderParams b = derive_params(2, 1.0, 1);
    EXPECT_EQ(b.ell, 2u);
    EXPECT_EQ(b.threshold, 1u);
    EXPECT_EQ(b.l_max, 1u);
    EXPECT_EQ(b.width, 1u);

    const CoderParams c = derive_params(256, 1.0, 1);
    EXPECT_EQ(c.ell, 2048u);
    EXPECT_EQ(c.threshold, 8u);
    EXPECT_EQ(c.l_max, 8u);
    EXPECT_EQ(c.width, 8u);
}

TEST(DeriveParams, ExactRootsAreNotRoundedUp) {
    // 64^(2/3) = 16 and log2 64 = 6, so ell = 2 * 16 * 6 and l_max = 6 / 1.5.
    const CoderParams p = derive_params(64, 1.5, 2);
    EXPECT_EQ(p.ell, 192u);
    EXPECT_EQ(p.threshold, 12u);
    EXPECT_EQ(p.l_max, 4u);
}

TEST(DeriveParams, RejectsBadInputs) {
    EXPECT_THROW(derive_params(1, 2.0, 10), ParameterError);
    EXPECT_THROW(derive_params(0, 2.0, 10), ParameterError);
    EXPECT_THROW(derive_params(256, 0.99, 10), ParameterError);
    EXPECT_THROW(derive_params(256, std::nan(""), 10), ParameterError);
    EXPECT_THROW(derive_params(256, 2.0, 0), ParameterError);
    EXPECT_THROW(derive_params(kMaxSigma + 1, 2.0, 1), ParameterError);
    // 2^32 * 32 symbols is far past the 2^31 - 1 window cap.
    EXPECT_THROW(derive_params(kMaxSigma, 1.0, 1), ParameterError);
}

TEST(DeriveParams, Deterministic) {
    EXPECT_EQ(derive_params(65536, 1.7, 13), derive_params(65536, 1.7, 13));
}

TEST(DeriveParams, InvariantsHoldForRandomInputs) {
    std::mt19937_64 rng(42);
    int checked = 0;
    while (checked < 3000) {
        const std::uint64_t sigma = 2 + rng() % ((rng() % 2) ? 300 : (std::uint64_t{1} << 24));
        const double lambda = 1.0 + static_cast<double>(rng() % 4000) / 1000.0;
        const std::uint64_t c = 1 + rng() % 40;
        CoderParams p;
        try {
            p = derive_params(sigma, lambda, c);
        } catch (const ParameterError&) {
            continue;  // window cap
        }
        ++checked;
        const long double root = std::pow(static_cast<long double>(sigma), 1.0L / lambda);
        EXPECT_GE(p.ell, c);
        EXPECT_GE(p.threshold, 1u);
        EXPECT_LE(p.threshold, p.ell);
        EXPECT_LE(static_cast<long double>(p.ell), static_cast<long double>(p.threshold) * root * (1 + 1e-12L));
        EXPECT_LE(p.l_max, p.width);
        EXPECT_EQ(p.width, static_cast<unsigned>(std::ceil(std::log2(static_cast<double>(sigma)) - 1e-12)));
        if (p.ell <= 5000) {
            for (std::uint64_t f = p.threshold; f <= p.ell; ++f) ASSERT_LE(brute_length(p.ell, f), p.l_max);
        } else {
            EXPECT_LE(brute_length(p.ell, p.threshold), p.l_max);
        }
    }
}

TEST(Validate, RejectsInconsistentFrozenValues) {
    CoderParams p = derive_params(256, 2.0, 10);
    EXPECT_NO_THROW(validate(p));
    CoderParams bad = p;
    bad.width = 7;
    EXPECT_THROW(validate(bad), ParameterError);
    bad = p;
    bad.threshold = 20;  // codeword_length(1280, 20) = 6 > l_max
    EXPECT_THROW(validate(bad), ParameterError);
    bad = p;
    bad.l_max = 9;
    EXPECT_THROW(validate(bad), ParameterError);
    bad = p;
    bad.threshold = 0;
    EXPECT_THROW(validate(bad), ParameterError);
}

}  // namespace
}  // namespace swsc
