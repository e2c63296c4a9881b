#pragma once

// Stable restriction from GL to Sp and O (Littlewood's rule) and the
// resulting change of basis between [V_lambda] and simple classes in K(Sp).

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string_view>
#include <vector>

#include "equisym/error.hpp"
#include "equisym/partition.hpp"
#include "equisym/symfunc.hpp"

namespace equisym {

enum class Group { Sp, O };

inline Group parseGroup(std::string_view text) {
    if (text == "sp" || text == "Sp")
        return Group::Sp;
    if (text == "o" || text == "O")
        return Group::O;
    throw UserError("unknown group '" + std::string(text) + "' (expected sp or o)");
}

/// Multiplicities of the simple constituents S_[mu] in the restriction of V_lambda.
struct BranchingResult {
    Partition source;
    std::map<Partition, mpz_class, PartitionOrder> multiplicities;

    mpz_class multiplicity(const Partition& mu) const {
        auto it = multiplicities.find(mu);
        return it == multiplicities.end() ? mpz_class(0) : it->second;
    }
};

namespace detail {

inline BranchingResult littlewoodRestriction(const Partition& lambda, bool (*admissible)(const Partition&)) {
    BranchingResult result{lambda, {}};
    for (int d = lambda.degree(); d >= 0; d -= 2) {
        const int removed = lambda.degree() - d;
        std::vector<Partition> betas;
        for (auto& beta : partitionsOf(removed))
            if (admissible(beta) && contains(lambda, beta))
                betas.push_back(std::move(beta));
        if (betas.empty())
            continue;
        for (const auto& mu : partitionsOf(d)) {
            if (!contains(lambda, mu))
                continue;
            mpz_class m = 0;
            for (const auto& beta : betas)
                m += lrCoeff(lambda, mu, beta);
            if (m != 0)
                result.multiplicities.emplace(mu, m);
        }
    }
    return result;
}

} // namespace detail

/// V_lambda restricted to Sp: multiplicity of S_[mu] is sum over beta with
/// all columns even of c^lambda_{mu beta}.
inline BranchingResult glToSp(const Partition& lambda) { return detail::littlewoodRestriction(lambda, &allColumnsEven); }

/// V_lambda restricted to O: as glToSp but with beta having all rows even.
inline BranchingResult glToO(const Partition& lambda) { return detail::littlewoodRestriction(lambda, &allRowsEven); }

inline BranchingResult branch(Group group, const Partition& lambda) {
    return group == Group::Sp ? glToSp(lambda) : glToO(lambda);
}

/// Maximum number of rows over the constituents; 0 for an empty result.
inline int ellOf(const BranchingResult& result) {
    int ell = 0;
    for (const auto& [mu, m] : result.multiplicities)
        ell = std::max(ell, mu.length());
    return ell;
}

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Entry (lambda, mu) = multiplicity of S_[mu] in V_lambda, rows and columns
/// indexed by partitionsUpTo(N) (degree descending), which makes the matrix
/// upper unitriangular. `inverse` expresses simple classes in the V-basis.
struct BasisChange {
    std::vector<Partition> index;
    IntMatrix matrix;
    IntMatrix inverse;
};

inline BasisChange basisChangeMatrix(Group group, int N) {
    if (N < 0)
        throw UserError("basisChangeMatrix: N must be nonnegative");
    BasisChange bc;
    bc.index = partitionsUpTo(N);
    const std::size_t n = bc.index.size();
    std::map<Partition, std::size_t, PartitionOrder> position;
    for (std::size_t i = 0; i < n; ++i)
        position.emplace(bc.index[i], i);

    bc.matrix.assign(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto restricted = branch(group, bc.index[i]);
        for (const auto& [mu, m] : restricted.multiplicities)
            bc.matrix[i][position.at(mu)] = m;
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (bc.matrix[i][i] != 1)
            throw ConsistencyError("branching matrix diagonal entry is not 1");
        for (std::size_t j = 0; j < i; ++j)
            if (bc.matrix[i][j] != 0)
                throw ConsistencyError("branching matrix is not upper triangular");
    }

    // Back substitution: M * X = I with M upper unitriangular.
    bc.inverse.assign(n, std::vector<mpz_class>(n, 0));
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t ii = n; ii-- > 0;) {
            mpz_class x = ii == col ? 1 : 0;
            for (std::size_t k = ii + 1; k < n; ++k)
                if (bc.matrix[ii][k] != 0)
                    x -= bc.matrix[ii][k] * bc.inverse[k][col];
            bc.inverse[ii][col] = x;
        }
    return bc;
}

/// Rewrites a class given in the V_lambda (Schur) basis in the simple basis:
/// the coefficient of lambda in the result is the coefficient of [S_[lambda]].
inline SymFunc schurToSimple(Group group, const SymFunc& f) {
    SymFunc out;
    for (const auto& [lambda, c] : f.terms()) {
        const auto restricted = branch(group, lambda);
        for (const auto& [mu, m] : restricted.multiplicities)
            out.add(mu, c * m);
    }
    return out;
}

/// Inverse of schurToSimple: [S_[lambda]] = [V_lambda] - sum of lower simples.
inline SymFunc simpleToSchur(Group group, const SymFunc& f) {
    SymFunc remaining = f;
    SymFunc out;
    while (!remaining.isZero()) {
        const auto [lambda, c] = *remaining.terms().begin();
        out.add(lambda, c);
        const auto restricted = branch(group, lambda);
        for (const auto& [mu, m] : restricted.multiplicities)
            remaining.add(mu, -c * m);
    }
    return out;
}

} // namespace equisym
