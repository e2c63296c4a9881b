#include <gtest/gtest.h>

#include "equisym/homext.hpp"
#include "oracles.hpp"

using namespace equisym;

TEST(HomGL, Examples) {
    const auto wedge = seriesSym(Generator::Wedge2, 6);
    for (const auto& lambda : partitionsUpTo(4))
        EXPECT_EQ(homGL(lambda, lambda, wedge), 1);
    EXPECT_EQ(homGL(Partition{1, 1}, Partition{}, wedge), 1);
    EXPECT_EQ(homGL(Partition{2}, Partition{}, wedge), 0);
}

TEST(HomSp, Examples) {
    EXPECT_EQ(homSpInj(Partition{1, 1}, Partition{}), 1);
    EXPECT_EQ(homSpInj(Partition{2}, Partition{}), 0);
    EXPECT_EQ(homSpInj(Partition{2, 2}, Partition{1, 1}), 1);
    EXPECT_EQ(homSpInj(Partition{1}, Partition{1, 1}), 0);
}

// Decompose V_mu (x) Sym(Lambda^2 V) term by term and read off the s_lambda coefficient.
TEST(HomSp, AgreesWithFullDecomposition) {
    const auto parts = partitionsUpTo(5);
    for (const auto& mu : parts) {
        SymFunc full;
        for (int d = 0; d <= 5; d += 2)
            for (const auto& beta : partitionsOf(d))
                if (allColumnsEven(beta))
                    full += lrMul(mu, beta);
        for (const auto& lambda : parts)
            if (lambda.degree() - mu.degree() <= 5) {
                EXPECT_EQ(homSpInj(lambda, mu), full.coefficient(lambda))
                    << formatPartition(lambda) << " " << formatPartition(mu);
            }
    }
}

TEST(HomH, Examples) {
    EXPECT_EQ(homHInj(Partition{1}, Partition{}), 1);
    EXPECT_EQ(homHInj(Partition{2}, Partition{}), 1);
    EXPECT_EQ(homHInj(Partition{}, Partition{1}), 0);
    EXPECT_EQ(homHInj(Partition{1, 1}, Partition{}), 1);
}

// Sym(V + Lambda^2 V) = Sym(V) Sym(Lambda^2 V): multiply by h_a first, then
// by the Lambda^2 part, using only the LR product.
TEST(HomH, FactorsThroughSymVThenSymWedge) {
    const auto parts = partitionsUpTo(5);
    for (const auto& mu : parts)
        for (const auto& lambda : parts) {
            const int diff = lambda.degree() - mu.degree();
            if (diff < 0)
                continue;
            mpz_class total = 0;
            for (int a = 0; a <= diff; ++a) {
                const int b = diff - a;
                if (b % 2 != 0)
                    continue;
                const auto step = lrMul(SymFunc::schur(mu), completeHomogeneous(a));
                for (const auto& beta : partitionsOf(b))
                    if (allColumnsEven(beta))
                        total += lrMul(step, SymFunc::schur(beta)).coefficient(lambda);
            }
            EXPECT_EQ(homHInj(lambda, mu), total) << formatPartition(lambda) << " " << formatPartition(mu);
        }
}

TEST(HomH, TruncationIsReported) {
    EXPECT_THROW(homHInj(row(5), Partition{}, 4), TruncationError);
    EXPECT_NO_THROW(homHInj(row(4), Partition{}, 4));
}

TEST(ExtH, Examples) {
    for (const auto& lambda : partitionsUpTo(3))
        for (const auto& mu : partitionsUpTo(3))
            EXPECT_EQ(extH(0, lambda, mu), lambda == mu ? 1 : 0);
    EXPECT_EQ(extH(1, Partition{}, Partition{1}), 1);
    EXPECT_EQ(extH(2, Partition{}, Partition{2, 1, 1}), 1);
    EXPECT_EQ(extH(2, Partition{}, Partition{2, 2}), 0);
    EXPECT_THROW(extH(-1, Partition{}, Partition{}), UserError);
}

// Each Ext group is a Hom out of Lambda^i(V + Lambda^2 V) (x) V_lambda; summing
// over mu weighted by GL dimension recovers the dimension of that space.
TEST(ExtH, DimensionsSumToKoszulTerm) {
    const int k = 3;
    for (int i = 0; i <= 3; ++i)
        for (const auto& lambda : partitionsUpTo(2)) {
            mpz_class total = 0;
            for (const auto& mu : partitionsUpTo(lambda.degree() + 2 * i))
                total += extH(i, lambda, mu) * glDim(mu, k);
            const mpz_class n = k + k * (k - 1) / 2;
            EXPECT_EQ(total, testing_oracles::binomial(n, static_cast<unsigned long>(i)) * glDim(lambda, k));
        }
}

TEST(ExtACC, Examples) {
    EXPECT_EQ(extACC(0), 1);
    EXPECT_EQ(extACC(1), 0);
    EXPECT_EQ(extACC(6), 1);
    EXPECT_THROW(extACC(-1), UserError);
}

TEST(ExtACC, ParityMatchesTrivialConstituentOfColumn) {
    for (int i = 0; i <= 12; ++i) {
        EXPECT_EQ(extACC(i), i % 2 == 0 ? 1 : 0) << i;
        EXPECT_EQ(extACC(i), glToSp(column(i)).multiplicity(Partition{}));
    }
}
