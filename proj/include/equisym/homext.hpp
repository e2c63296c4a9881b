#pragma once

// Hom and Ext dimensions between injectives and simples, reduced to
// Littlewood-Richardson counts against a graded series.

#include <gmpxx.h>

#include <string>

#include "equisym/branching.hpp"
#include "equisym/error.hpp"
#include "equisym/partition.hpp"
#include "equisym/symfunc.hpp"

namespace equisym {

inline constexpr int kDefaultMaxDegree = 12;

/// dim Hom_GL(V_lambda, F (x) V_mu): the coefficient of s_lambda in
/// s_mu * F_{|lambda| - |mu|}. Zero when |lambda| < |mu|.
inline mpz_class homGL(const Partition& lambda, const Partition& mu, const GradedSeries& series) {
    const int diff = lambda.degree() - mu.degree();
    if (diff < 0)
        return 0;
    mpz_class total = 0;
    for (const auto& [nu, c] : series.component(diff).terms())
        if (nu.degree() == diff)
            total += c * lrCoeff(lambda, mu, nu);
    return total;
}

namespace detail {

inline GradedSeries seriesFor(Generator gen, const Partition& lambda, const Partition& mu, int maxDegree) {
    const int diff = lambda.degree() - mu.degree();
    if (diff > maxDegree)
        throw TruncationError("degree difference " + std::to_string(diff) + " exceeds the truncation degree " +
                              std::to_string(maxDegree));
    return seriesSym(gen, diff < 0 ? 0 : diff);
}

} // namespace detail

/// dim Hom_Sp(V_lambda, V_mu) between injectives of Rep(Sp).
inline mpz_class homSpInj(const Partition& lambda, const Partition& mu, int maxDegree = kDefaultMaxDegree) {
    return homGL(lambda, mu, detail::seriesFor(Generator::Wedge2, lambda, mu, maxDegree));
}

/// dim Hom_H(V_lambda, V_mu) between injectives of Rep(H), via Sym(V + Lambda^2 V).
inline mpz_class homHInj(const Partition& lambda, const Partition& mu, int maxDegree = kDefaultMaxDegree) {
    return homGL(lambda, mu, detail::seriesFor(Generator::VPlusWedge2, lambda, mu, maxDegree));
}

/// dim Ext^i_H(S_[lambda] W, S_[mu] W) = dim Hom_GL(Lambda^i(V + Lambda^2 V) (x) V_lambda, V_mu).
inline mpz_class extH(int i, const Partition& lambda, const Partition& mu, int maxDegree = kDefaultMaxDegree) {
    if (i < 0)
        throw UserError("Ext degree must be nonnegative");
    if (mu.degree() > maxDegree)
        throw TruncationError("|mu| = " + std::to_string(mu.degree()) + " exceeds the truncation degree " +
                              std::to_string(maxDegree));
    const int diff = mu.degree() - lambda.degree();
    // Lambda^i(V + Lambda^2 V) lives in internal degrees i..2i.
    if (diff < i || diff > 2 * i)
        return 0;
    mpz_class total = 0;
    const GradedSeries koszul = seriesExt(i);
    for (const auto& [nu, c] : koszul.component(i).terms())
        if (nu.degree() == diff)
            total += c * lrCoeff(mu, lambda, nu);
    return total;
}

/// dim Ext^i_A(C, C) = dim Hom_Sp(Lambda^i V, C): the trivial multiplicity in V_{(1^i)}|Sp.
inline mpz_class extACC(int i) {
    if (i < 0)
        throw UserError("Ext degree must be nonnegative");
    return glToSp(column(i)).multiplicity(Partition{});
}

} // namespace equisym
