#include <gtest/gtest.h>

#include <random>
#include <set>

#include "equisym/diagcat.hpp"
#include "equisym/homext.hpp"
#include "oracles.hpp"

using namespace equisym;
namespace oracle = testing_oracles;

namespace {

DiagMorphism permutationMorphism(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    return canonicalize(RawMorphism{n, n, perm, {}, 1});
}

std::vector<int> inversePermutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k)
        inv[static_cast<std::size_t>(perm[k] - 1)] = static_cast<int>(k) + 1;
    return inv;
}

} // namespace

TEST(Canonicalize, FlippedEdgeAbsorbsSign) {
    const auto m = canonicalize(RawMorphism{0, 3, {}, {{3, 2}}, 1});
    EXPECT_EQ(m.edges(), (std::vector<Edge>{{2, 3}}));
    EXPECT_EQ(m.sign(), -1);
    EXPECT_EQ(m.xiMarked(), std::vector<int>{1});
}

TEST(Canonicalize, CanonicalInputUnchanged) {
    const auto m = canonicalize(RawMorphism{1, 4, {2}, {{1, 3}}, -1});
    EXPECT_EQ(canonicalize(RawMorphism{1, 4, m.injection(), m.edges(), m.sign()}), m);
    EXPECT_EQ(m.sign(), -1);
}

TEST(Canonicalize, TwoFlipsCancel) {
    const auto m = canonicalize(RawMorphism{0, 4, {}, {{4, 3}, {2, 1}}, 1});
    EXPECT_EQ(m.edges(), (std::vector<Edge>{{1, 2}, {3, 4}}));
    EXPECT_EQ(m.sign(), 1);
}

TEST(Canonicalize, RejectsInvalidData) {
    EXPECT_THROW(canonicalize(RawMorphism{2, 3, {1, 1}, {}, 1}), UserError);
    EXPECT_THROW(canonicalize(RawMorphism{1, 3, {1}, {{1, 2}}, 1}), UserError);
    EXPECT_THROW(canonicalize(RawMorphism{1, 3, {4}, {}, 1}), UserError);
    EXPECT_THROW(canonicalize(RawMorphism{0, 3, {}, {}, 2}), UserError);
    EXPECT_THROW(canonicalize(RawMorphism{2, 3, {1}, {}, 1}), UserError);
}

TEST(MorphismText, ParseAndFormat) {
    const auto g = parseMorphism("inj=1,2;edges=3>4");
    EXPECT_EQ(g.sourceSize(), 2);
    EXPECT_EQ(g.targetSize(), 4);
    EXPECT_EQ(formatMorphism(g), "inj=1,2;edges=3>4;t=4;sign=+1");
    const auto f = parseMorphism("inj=;edges=2>1;t=3");
    EXPECT_EQ(f.sign(), -1);
    EXPECT_EQ(f.targetSize(), 3);
    EXPECT_EQ(parseMorphism(formatMorphism(f)), f);
    EXPECT_THROW(parseMorphism("inj=1;edges=2-3"), UserError);
    EXPECT_THROW(parseMorphism("bogus=1"), UserError);
}

TEST(Compose, WorkedExample) {
    const auto f = parseMorphism("inj=;edges=1>2");
    const auto g = parseMorphism("inj=1,2;edges=3>4");
    const auto gf = compose(g, f);
    EXPECT_EQ(gf.sourceSize(), 0);
    EXPECT_EQ(gf.targetSize(), 4);
    EXPECT_EQ(gf.edges(), (std::vector<Edge>{{1, 2}, {3, 4}}));
    EXPECT_EQ(gf.sign(), 1);
}

TEST(Compose, OrderReversingInjectionFlipsTransportedEdge) {
    const auto f = parseMorphism("inj=;edges=1>2");
    const auto g = parseMorphism("inj=2,1;t=2");
    const auto gf = compose(g, f);
    EXPECT_EQ(gf.edges(), (std::vector<Edge>{{1, 2}}));
    EXPECT_EQ(gf.sign(), -1);
}

TEST(Compose, IdentitiesAreNeutral) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> size(0, 5);
        int s = size(rng), t = size(rng);
        if (s > t)
            std::swap(s, t);
        const auto m = oracle::randomMorphism(s, t, rng);
        EXPECT_EQ(compose(identityMorphism(t), m), m);
        EXPECT_EQ(compose(m, identityMorphism(s)), m);
    }
}

TEST(Compose, Associative) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> size(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> sizes{size(rng), size(rng), size(rng), size(rng)};
        std::sort(sizes.begin(), sizes.end());
        const auto f = oracle::randomMorphism(sizes[0], sizes[1], rng);
        const auto g = oracle::randomMorphism(sizes[1], sizes[2], rng);
        const auto h = oracle::randomMorphism(sizes[2], sizes[3], rng);
        EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
    }
}

TEST(Compose, SizeMismatchIsAnError) {
    EXPECT_THROW(compose(identityMorphism(2), identityMorphism(3)), UserError);
}

TEST(HomDim, Examples) {
    EXPECT_EQ(homDim(1, 1), 1);
    EXPECT_EQ(homDim(0, 2), 2);
    EXPECT_EQ(homDim(0, 4), 10);
    EXPECT_EQ(homDim(3, 2), 0);
}

TEST(HomDim, MatchesInjectionsTimesMatchings) {
    for (int t = 0; t <= 8; ++t)
        for (int s = 0; s <= t; ++s) {
            const mpz_class injections = factorial(t) / factorial(t - s);
            EXPECT_EQ(homDim(s, t), injections * oracle::partialMatchingCount(t - s));
        }
}

TEST(HomBasis, DistinctCanonicalElements) {
    for (int t = 0; t <= 5; ++t)
        for (int s = 0; s <= t; ++s) {
            const auto basis = homBasis(s, t);
            EXPECT_EQ(mpz_class(static_cast<unsigned long>(basis.size())), homDim(s, t));
            std::set<std::string> seen;
            for (const auto& b : basis) {
                EXPECT_EQ(b.sign(), 1);
                seen.insert(formatMorphism(b));
            }
            EXPECT_EQ(seen.size(), basis.size());
        }
}

TEST(Trace, Examples) {
    EXPECT_EQ(bimoduleTrace(1, 1, Partition{1}, Partition{1}), 1);
    EXPECT_EQ(bimoduleTrace(0, 2, Partition{}, Partition{2}), 0);
    for (int t = 0; t <= 5; ++t)
        for (int s = 0; s <= t; ++s)
            EXPECT_EQ(mpz_class(static_cast<long>(bimoduleTrace(s, t, column(s), column(t)))), homDim(s, t));
    EXPECT_THROW(bimoduleTrace(1, 2, Partition{2}, Partition{2}), UserError);
}

// The bimodule action b -> tau o b o sigma^{-1}, evaluated through composition
// with permutation morphisms and matched back against the basis.
TEST(Trace, AgreesWithActionThroughComposition) {
    for (int t = 0; t <= 4; ++t)
        for (int s = 0; s <= t; ++s)
            for (const auto& sigma : partitionsOf(s))
                for (const auto& tau : partitionsOf(t)) {
                    const auto sigmaInv = permutationMorphism(inversePermutation(representativePermutation(sigma)));
                    const auto tauMorph = permutationMorphism(representativePermutation(tau));
                    std::int64_t trace = 0;
                    for (const auto& b : homBasis(s, t)) {
                        const auto moved = compose(tauMorph, compose(b, sigmaInv));
                        if (moved.sameShape(b))
                            trace += moved.sign() * b.sign();
                    }
                    EXPECT_EQ(bimoduleTrace(s, t, sigma, tau), trace);
                }
}

TEST(HomViaC, Examples) {
    EXPECT_EQ(homHViaC(Partition{1}, Partition{}), 1);
    EXPECT_EQ(homHViaC(Partition{1, 1}, Partition{}), 1);
    EXPECT_EQ(homHViaC(Partition{2}, Partition{2}), homHInj(Partition{2}, Partition{2}));
    EXPECT_EQ(homHViaC(Partition{}, Partition{1}), 0);
    EXPECT_THROW(homHViaC(row(8), Partition{}), BudgetError);
}

TEST(HomViaC, IsotypesExhaustHomSpace) {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= n; ++m) {
            mpz_class total = 0;
            for (const auto& lambda : partitionsOf(n))
                for (const auto& mu : partitionsOf(m))
                    total += spechtDim(lambda) * spechtDim(mu) * homHViaC(lambda, mu);
            EXPECT_EQ(total, homDim(m, n)) << m << " " << n;
        }
}

TEST(HomViaC, AgreesWithSeriesRoute) {
    for (const auto& lambda : partitionsUpTo(4))
        for (const auto& mu : partitionsUpTo(4))
            EXPECT_EQ(homHViaC(lambda, mu), homHInj(lambda, mu)) << formatPartition(lambda) << " " << formatPartition(mu);
}
