#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "swsc/corpus.hpp"
#include "swsc/raw_io.hpp"

namespace swsc {
namespace {

TEST(Rng, EngineMatchesStandardSequence) {
    // The standard fixes the 10000th output of a default-seeded mt19937_64.
    std::mt19937_64 e;
    e.discard(9999);
    EXPECT_EQ(e(), 9981545732273789042ull);
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
    PortableRng rng(3);
    std::vector<int> seen(7, 0);
    for (int i = 0; i < 7000; ++i) {
        const auto v = rng.below(7);
        ASSERT_LT(v, 7u);
        ++seen[v];
    }
    for (const int s : seen) EXPECT_GT(s, 800);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

CorpusSpec spec_of(Distribution d, std::uint64_t sigma, std::uint64_t n, std::uint64_t seed) {
    CorpusSpec s;
    s.dist = d;
    s.sigma = sigma;
    s.n = n;
    s.seed = seed;
    return s;
}

TEST(Corpus, DeterministicPerSeed) {
    for (const auto d : {Distribution::uniform, Distribution::zipf, Distribution::markov}) {
        const auto a = generate_corpus(spec_of(d, 4096, 5000, 7));
        EXPECT_EQ(a, generate_corpus(spec_of(d, 4096, 5000, 7)));
        EXPECT_NE(a, generate_corpus(spec_of(d, 4096, 5000, 8)));
        EXPECT_EQ(a.size(), 5000u);
        EXPECT_TRUE(std::all_of(a.begin(), a.end(), [](Symbol x) { return x < 4096; }));
    }
}

TEST(Corpus, ZipfIsSkewedTowardLowRanks) {
    const auto s = generate_corpus(spec_of(Distribution::zipf, 4096, 100000, 1));
    std::map<Symbol, int> f;
    for (const Symbol a : s) ++f[a];
    EXPECT_GT(f[0], f[1]);
    EXPECT_GT(f[1], f[9]);
    // rank 1 mass is 1/H_4096 ~ 0.11
    EXPECT_NEAR(f[0] / 100000.0, 0.1126, 0.01);
}

TEST(Corpus, MarkovStatesShiftTheAlphabet) {
    CorpusSpec spec = spec_of(Distribution::markov, 4096, 50000, 2);
    spec.stickiness = 0.99;
    const auto s = generate_corpus(spec);
    std::map<Symbol, int> f;
    for (const Symbol a : s) ++f[a];
    // Heads of several rotated copies of the zipf source show up.
    int heads = 0;
    for (Symbol st = 0; st < 8; ++st) heads += f[st * 512] > 200;
    EXPECT_GE(heads, 4);
}

TEST(Corpus, RejectsBadSpecs) {
    EXPECT_THROW(generate_corpus(spec_of(Distribution::uniform, 1, 10, 1)), ParameterError);
    EXPECT_THROW(generate_corpus(spec_of(Distribution::zipf, kMaxSkewedSigma + 1, 10, 1)), ParameterError);
    CorpusSpec bad = spec_of(Distribution::markov, 256, 10, 1);
    bad.states = 0;
    EXPECT_THROW(generate_corpus(bad), ParameterError);
    bad.states = 2;
    bad.stickiness = 1.5;
    EXPECT_THROW(generate_corpus(bad), ParameterError);
    EXPECT_EQ(parse_distribution("zipf"), Distribution::zipf);
    EXPECT_FALSE(parse_distribution("gauss").has_value());
}

TEST(RawIo, PackUnpackRoundTrip) {
    std::mt19937_64 rng(4);
    for (const unsigned bytes : {1u, 2u, 4u}) {
        std::vector<Symbol> s(1000);
        const std::uint64_t limit = std::uint64_t{1} << (8 * bytes);
        for (auto& a : s) a = static_cast<Symbol>(rng() % limit);
        const auto raw = pack_symbols(s, bytes);
        ASSERT_EQ(raw.size(), s.size() * bytes);
        EXPECT_EQ(unpack_symbols(raw, bytes), s);
    }
    const std::vector<Symbol> one{0x0102};
    EXPECT_EQ(pack_symbols(one, 2), (std::vector<std::uint8_t>{0x02, 0x01}));
}

TEST(RawIo, Errors) {
    const std::vector<Symbol> big{300};
    EXPECT_THROW(pack_symbols(big, 1), std::out_of_range);
    EXPECT_THROW(pack_symbols(big, 3), std::invalid_argument);
    const std::vector<std::uint8_t> odd{1, 2, 3};
    EXPECT_THROW(unpack_symbols(odd, 2), std::invalid_argument);
}

}  // namespace
}  // namespace swsc
