#include <gtest/gtest.h>

#include "equisym/branching.hpp"
#include "equisym/oracle.hpp"
#include "oracles.hpp"

using namespace equisym;

namespace {

using Mults = std::map<Partition, mpz_class, PartitionOrder>;

} // namespace

TEST(Branching, SymplecticExamples) {
    EXPECT_EQ(glToSp(Partition{1, 1}).multiplicities, (Mults{{Partition{1, 1}, 1}, {Partition{}, 1}}));
    for (int k = 0; k <= 6; ++k)
        EXPECT_EQ(glToSp(row(k)).multiplicities, (Mults{{row(k), 1}}));
    EXPECT_EQ(glToSp(Partition{2, 2}).multiplicities,
              (Mults{{Partition{2, 2}, 1}, {Partition{1, 1}, 1}, {Partition{}, 1}}));
}

TEST(Branching, OrthogonalExamples) {
    EXPECT_EQ(glToO(Partition{2}).multiplicities, (Mults{{Partition{2}, 1}, {Partition{}, 1}}));
    EXPECT_EQ(glToO(Partition{1, 1}).multiplicities, (Mults{{Partition{1, 1}, 1}}));
    EXPECT_EQ(glToO(Partition{}).multiplicities, (Mults{{Partition{}, 1}}));
}

TEST(Branching, TransposeExchangesSymplecticAndOrthogonal) {
    for (const auto& lambda : partitionsUpTo(7)) {
        const auto sp = glToSp(lambda);
        const auto o = glToO(transpose(lambda));
        ASSERT_EQ(sp.multiplicities.size(), o.multiplicities.size());
        for (const auto& [mu, m] : sp.multiplicities)
            EXPECT_EQ(o.multiplicity(transpose(mu)), m);
    }
}

TEST(Branching, LeadingConstituentAndParity) {
    for (const auto& lambda : partitionsUpTo(7))
        for (auto group : {Group::Sp, Group::O}) {
            const auto result = branch(group, lambda);
            EXPECT_EQ(result.multiplicity(lambda), 1);
            for (const auto& [mu, m] : result.multiplicities) {
                EXPECT_GT(m, 0);
                EXPECT_EQ((lambda.degree() - mu.degree()) % 2, 0);
                EXPECT_TRUE(contains(lambda, mu));
            }
        }
}

// At rank n >= |lambda| the stable rule is exact, so dimensions must add up.
TEST(Branching, DimensionsAddUpAtFiniteRank) {
    for (const auto& lambda : partitionsUpTo(5)) {
        const int n = std::max(1, lambda.degree());
        const auto result = glToSp(lambda);
        mpz_class total = 0;
        for (const auto& [mu, m] : result.multiplicities)
            total += m * spDim(mu, n);
        EXPECT_EQ(total, glDim(lambda, 2 * n)) << formatPartition(lambda);
    }
}

TEST(Ell, Examples) {
    EXPECT_EQ(ellOf(glToSp(Partition{1, 1})), 2);
    for (int k = 1; k <= 5; ++k)
        EXPECT_EQ(ellOf(glToSp(row(k))), 1);
    EXPECT_EQ(ellOf(glToSp(Partition{})), 0);
    EXPECT_EQ(ellOf(BranchingResult{}), 0);
}

TEST(Ell, Subadditive) {
    const auto parts = partitionsUpTo(4);
    for (const auto& lambda : parts)
        for (const auto& mu : parts) {
            const int bound = ellOf(glToSp(lambda)) + ellOf(glToSp(mu));
            const auto product = lrMul(lambda, mu);
            for (const auto& [nu, c] : product.terms())
                EXPECT_LE(ellOf(glToSp(nu)), bound);
        }
}

TEST(BasisChange, UnitriangularWithIntegerInverse) {
    for (auto group : {Group::Sp, Group::O}) {
        const auto bc = basisChangeMatrix(group, 6);
        const std::size_t n = bc.index.size();
        ASSERT_EQ(n, partitionsUpTo(6).size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                EXPECT_GE(bc.matrix[i][j], 0);
                if (j < i) {
                    EXPECT_EQ(bc.matrix[i][j], 0);
                }
                mpz_class product = 0;
                for (std::size_t k = 0; k < n; ++k)
                    product += bc.matrix[i][k] * bc.inverse[k][j];
                EXPECT_EQ(product, i == j ? 1 : 0);
            }
    }
    EXPECT_THROW(basisChangeMatrix(Group::Sp, -1), UserError);
}

TEST(BasisChange, SimpleAndSchurBasesRoundTrip) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = testing_oracles::randomSymFunc(rng, 6);
        for (auto group : {Group::Sp, Group::O}) {
            EXPECT_EQ(simpleToSchur(group, schurToSimple(group, f)), f);
            EXPECT_EQ(schurToSimple(group, simpleToSchur(group, f)), f);
        }
    }
}

TEST(BasisChange, MatchesSimpleBasisConversion) {
    const auto bc = basisChangeMatrix(Group::Sp, 5);
    for (std::size_t i = 0; i < bc.index.size(); ++i) {
        const auto simple = schurToSimple(Group::Sp, SymFunc::schur(bc.index[i]));
        for (std::size_t j = 0; j < bc.index.size(); ++j)
            EXPECT_EQ(simple.coefficient(bc.index[j]), bc.matrix[i][j]);
    }
}

TEST(Branching, GroupNames) {
    EXPECT_EQ(parseGroup("sp"), Group::Sp);
    EXPECT_EQ(parseGroup("o"), Group::O);
    EXPECT_THROW(parseGroup("gl"), UserError);
}
