#pragma once

// The acceptance suite: ten end-to-end checks, each with a pinned tolerance
// (all exact) and a wall-clock limit. Shared by the `selftest` subcommand and
// the acceptance test binary.

#include <chrono>
#include <functional>
#include <iosfwd>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "equisym/branching.hpp"
#include "equisym/diagcat.hpp"
#include "equisym/homext.hpp"
#include "equisym/kgroup.hpp"
#include "equisym/oracle.hpp"
#include "equisym/partition.hpp"
#include "equisym/symfunc.hpp"

namespace equisym::cli {
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
} // namespace equisym::cli

namespace equisym::acceptance {

inline constexpr std::uint64_t kFunctorialitySeed = 7;
inline constexpr std::uint64_t kKGroupSeed = 5;
inline constexpr std::uint64_t kLieSeed = 11;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limitSeconds = 0;
};

namespace detail {

struct Outcome {
    bool pass = true;
    std::string detail;
};

inline CriterionResult timed(int id, std::string name, double limitSeconds, const std::function<Outcome()>& body) {
    CriterionResult r{id, std::move(name), false, {}, 0, limitSeconds};
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = o.pass;
    r.detail = o.detail;
    if (r.seconds > limitSeconds) {
        r.pass = false;
        std::ostringstream os;
        os << r.detail << (r.detail.empty() ? "" : "; ") << "took " << r.seconds << " s, limit " << limitSeconds << " s";
        r.detail = os.str();
    }
    return r;
}

inline SymFunc randomSymFunc(std::mt19937_64& rng, int maxDegree) {
    static const std::vector<Partition> pool = partitionsUpTo(5);
    std::vector<Partition> allowed;
    for (const auto& p : pool)
        if (p.degree() <= maxDegree)
            allowed.push_back(p);
    std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> count(1, 4);
    SymFunc f;
    const int terms = count(rng);
    for (int k = 0; k < terms; ++k)
        f.add(allowed[pick(rng)], coeff(rng));
    return f;
}

} // namespace detail

/// 1. Ext^i_A(C, C) through the CLI: 1 for even i, 0 for odd i, i = 0..10.
inline CriterionResult extPeriodicity() {
    return detail::timed(1, "ext a-cc periodicity", 1.0, [] {
        detail::Outcome o;
        for (int i = 0; i <= 10; ++i) {
            std::ostringstream out, err;
            const int code = cli::run({"ext", "a-cc", std::to_string(i)}, out, err);
            const std::string expected = i % 2 == 0 ? "1\n" : "0\n";
            if (code != 0 || out.str() != expected || extACC(i) != (i % 2 == 0 ? 1 : 0)) {
                o.pass = false;
                o.detail = "i=" + std::to_string(i) + " gave '" + out.str() + "'";
                return o;
            }
        }
        o.detail = "i=0..10";
        return o;
    });
}

/// 2. dim Hom_H(V_lambda, V_mu) from Sym(V + Lambda^2 V) equals the diagram-category count.
inline CriterionResult homHDualRoute() {
    return detail::timed(2, "Hom_H via tca = Hom_H via diagram category", 120.0, [] {
        detail::Outcome o;
        const auto parts = partitionsUpTo(4);
        int pairs = 0;
        for (const auto& lambda : parts)
            for (const auto& mu : parts) {
                const auto viaTca = homHInj(lambda, mu);
                const auto viaC = homHViaC(lambda, mu);
                ++pairs;
                if (viaTca != viaC) {
                    o.pass = false;
                    o.detail = "lambda=" + formatPartition(lambda) + " mu=" + formatPartition(mu) + ": " + viaTca.get_str() +
                               " vs " + viaC.get_str();
                    return o;
                }
            }
        o.detail = std::to_string(pairs) + " pairs";
        return o;
    });
}

/// 3. Supports of Sym(Lambda^2 V) and Sym(Sym^2 V) through degree 10.
inline CriterionResult littlewoodSeries() {
    return detail::timed(3, "Sym(wedge2)/Sym(sym2) supports", 30.0, [] {
        detail::Outcome o;
        const auto wedge = seriesSym(Generator::Wedge2, 10);
        const auto sym = seriesSym(Generator::Sym2, 10);
        for (int d = 0; d <= 10; ++d) {
            std::set<Partition> expectWedge, expectSym, gotWedge, gotSym;
            for (const auto& p : partitionsOf(d)) {
                if (allColumnsEven(p))
                    expectWedge.insert(p);
                if (allRowsEven(p))
                    expectSym.insert(p);
            }
            for (const auto& [p, c] : wedge.component(d).terms())
                if (c > 0)
                    gotWedge.insert(p);
            for (const auto& [p, c] : sym.component(d).terms())
                if (c > 0)
                    gotSym.insert(p);
            if (gotWedge != expectWedge || gotSym != expectSym || gotWedge.size() != wedge.component(d).size() ||
                gotSym.size() != sym.component(d).size()) {
                o.pass = false;
                o.detail = "mismatch in degree " + std::to_string(d);
                return o;
            }
        }
        o.detail = "degrees 0..10";
        return o;
    });
}

/// 4. The GL -> Sp branching matrix up to size 8 is unitriangular, nonnegative, integrally invertible.
inline CriterionResult branchingUnitriangular() {
    return detail::timed(4, "Sp branching matrix unitriangular (N=8)", 60.0, [] {
        detail::Outcome o;
        const auto bc = basisChangeMatrix(Group::Sp, 8);
        const std::size_t n = bc.index.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto& x = bc.matrix[i][j];
                if (x < 0 || (i == j && x != 1) || (j < i && x != 0)) {
                    o.pass = false;
                    o.detail = "bad entry at (" + formatPartition(bc.index[i]) + ", " + formatPartition(bc.index[j]) + ")";
                    return o;
                }
                if (i != j && x != 0 && bc.index[j].degree() >= bc.index[i].degree()) {
                    o.pass = false;
                    o.detail = "constituent not of smaller size";
                    return o;
                }
                mpz_class product = 0;
                for (std::size_t k = 0; k < n; ++k)
                    product += bc.matrix[i][k] * bc.inverse[k][j];
                if (product != (i == j ? 1 : 0)) {
                    o.pass = false;
                    o.detail = "matrix * inverse is not the identity";
                    return o;
                }
            }
        std::size_t row11 = n;
        std::size_t colEmpty = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (bc.index[i] == Partition{1, 1})
                row11 = i;
            if (bc.index[i].empty())
                colEmpty = i;
        }
        if (row11 == n || colEmpty == n || bc.matrix[row11][colEmpty] != 1) {
            o.pass = false;
            o.detail = "(1,1) row lacks the trivial constituent";
            return o;
        }
        o.detail = std::to_string(n) + "x" + std::to_string(n);
        return o;
    });
}

/// 5. The composition rule of C agrees with composition of realized maps.
inline CriterionResult compositionFunctorial() {
    return detail::timed(5, "compose is functorial (100 pairs, n=4)", 120.0, [] {
        detail::Outcome o;
        const FiniteModel model(4);
        std::mt19937_64 rng(kFunctorialitySeed);
        for (int trial = 0; trial < 100; ++trial) {
            const auto [g, f] = randomComposablePair(4, rng);
            if (!checkFunctoriality(model, g, f)) {
                o.pass = false;
                o.detail = "trial " + std::to_string(trial) + ": g=" + formatMorphism(g) + " f=" + formatMorphism(f);
                return o;
            }
        }
        o.detail = "100/100 exact";
        return o;
    });
}

/// 6. The realization is faithful on each Hom_C([s],[t]), s <= t <= 4, at rank t.
inline CriterionResult realizationFaithful() {
    return detail::timed(6, "realized Hom rank = homDim", 600.0, [] {
        detail::Outcome o;
        auto check = [&](int n, int s, int t) {
            const auto r = realizedHomRank(FiniteModel(n), s, t);
            if (mpz_class(static_cast<unsigned long>(r)) != homDim(s, t)) {
                o.pass = false;
                o.detail = "(s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ") n=" + std::to_string(n) +
                           ": rank " + std::to_string(r) + " vs " + homDim(s, t).get_str();
            }
            return o.pass;
        };
        for (int t = 0; t <= 4; ++t)
            for (int s = 0; s <= t; ++s)
                if (!check(std::max(t, 1), s, t))
                    return o;
        if (!check(1, 0, 2))
            return o;
        o.detail = "0<=s<=t<=4, plus (0,2) at n=1";
        return o;
    });
}

/// 7. Traceless tensors against the symplectic Weyl dimension formula, and W_2 data.
inline CriterionResult weylBookkeeping() {
    return detail::timed(7, "traceless tensors = sum spechtDim * dim Sp", 60.0, [] {
        detail::Outcome o;
        const FiniteModel model(3);
        std::ostringstream os;
        for (int d = 0; d <= 3; ++d) {
            const auto traceless = tracelessTensors(model, Space::V, d).cols();
            mpz_class expected = 0;
            for (const auto& lambda : partitionsOf(d))
                expected += spechtDim(lambda) * spDim(lambda, 3);
            os << "d=" << d << ":" << traceless << " ";
            if (mpz_class(static_cast<unsigned long>(traceless)) != expected) {
                o.pass = false;
                o.detail = "d=" + std::to_string(d) + ": kernel " + std::to_string(traceless) + " vs " + expected.get_str();
                return o;
            }
        }
        const FiniteModel small(2);
        const auto w2 = tracelessTensors(small, Space::W, 2).cols();
        const auto sym = schurIntersect(small, Partition{2}, Space::W);
        const auto alt = schurIntersect(small, Partition{1, 1}, Space::W);
        if (w2 != 8 || sym != 6 || alt != 2) {
            o.pass = false;
            o.detail = "W_2: " + std::to_string(w2) + " = " + std::to_string(sym) + " + " + std::to_string(alt);
            return o;
        }
        os << "W_2: 8 = 6 + 2";
        o.detail = os.str();
        return o;
    });
}

/// 8. l(V (x) W) <= l(V) + l(W) for injectives V_lambda, V_mu with |lambda|, |mu| <= 5.
inline CriterionResult ellSubadditivity() {
    return detail::timed(8, "l-subadditivity", 60.0, [] {
        detail::Outcome o;
        const auto parts = partitionsUpTo(5);
        std::map<Partition, int, PartitionOrder> ell;
        for (const auto& p : parts)
            ell[p] = ellOf(glToSp(p));
        int pairs = 0;
        for (const auto& lambda : parts)
            for (const auto& mu : parts) {
                const int bound = ell[lambda] + ell[mu];
                const auto product = lrMul(lambda, mu);
                for (const auto& [nu, c] : product.terms())
                    if (ellOf(glToSp(nu)) > bound) {
                        o.pass = false;
                        o.detail = "lambda=" + formatPartition(lambda) + " mu=" + formatPartition(mu);
                        return o;
                    }
                ++pairs;
            }
        o.detail = std::to_string(pairs) + " pairs";
        return o;
    });
}

/// 9. K(A) = Lambda[C] + Lambda[A]: gamma and pi split the basis and are Lambda-linear.
inline CriterionResult grothendieckSkeleton() {
    return detail::timed(9, "K(A) free of rank two", 60.0, [] {
        detail::Outcome o;
        std::mt19937_64 rng(kKGroupSeed);
        for (int trial = 0; trial < 50; ++trial) {
            const auto v = detail::randomSymFunc(rng, 5);
            const bool skeleton = gamma(classTorsion(v)) == v && pi(classFree(v)) == v && gamma(classFree(v)).isZero() &&
                                  pi(classTorsion(v)).isZero();
            const auto f = detail::randomSymFunc(rng, 4);
            const KClassA c{v, detail::randomSymFunc(rng, 5)};
            const auto moved = act(f, c);
            const bool linear = gamma(moved) == lrMul(f, gamma(c)) && pi(moved) == lrMul(f, pi(c));
            if (!skeleton || !linear) {
                o.pass = false;
                o.detail = "trial " + std::to_string(trial) + " v=" + formatSymFunc(v);
                return o;
            }
        }
        o.detail = "50 random classes";
        return o;
    });
}

/// 10. sp = k + h at ranks 1..4 with 25 random elements each.
inline CriterionResult lieDecomposition() {
    return detail::timed(10, "sp = k + h", 120.0, [] {
        detail::Outcome o;
        std::mt19937_64 rng(kLieSeed);
        for (int n = 1; n <= 4; ++n) {
            const std::size_t d = 2 * static_cast<std::size_t>(n);
            const auto spBasis = symplecticLieBasis(n);
            const auto hBasis = stabilizerLieBasis(n);
            const auto kBasis = borelLieBasis(n);
            const std::size_t spDimension = static_cast<std::size_t>(n * (2 * n + 1));
            auto joint = kBasis;
            joint.insert(joint.end(), hBasis.begin(), hBasis.end());
            if (spBasis.size() != spDimension || hBasis.size() != spDimension - d || matrixFamilyRank(joint) != spDimension) {
                o.pass = false;
                o.detail = "dimension count failed at n=" + std::to_string(n);
                return o;
            }
            const FiniteModel model(n);
            for (int trial = 0; trial < 25; ++trial) {
                const auto x = randomSymplecticLie(n, rng);
                const auto [y, z] = lieDecompose(n, x);
                bool ok = z - y == x && isSymplecticLie(model, z);
                for (std::size_t r = 0; r < d && ok; ++r) {
                    mpq_class rowSum = 0;
                    for (std::size_t c = 0; c < d; ++c) {
                        rowSum += z(r, c);
                        const bool inBlock = (r / 2 == c / 2) && !(r % 2 == 1 && c % 2 == 0);
                        if (!inBlock && y(r, c) != 0)
                            ok = false;
                    }
                    if (rowSum != 0)
                        ok = false;
                    if (r % 2 == 0 && y(r + 1, r + 1) != -y(r, r))
                        ok = false;
                }
                if (!ok) {
                    o.pass = false;
                    o.detail = "n=" + std::to_string(n) + " trial " + std::to_string(trial);
                    return o;
                }
            }
        }
        o.detail = "n=1..4, 25 elements each";
        return o;
    });
}

inline std::vector<CriterionResult> runAll() {
    return {extPeriodicity(),      homHDualRoute(),     littlewoodSeries(),     branchingUnitriangular(),
            compositionFunctorial(), realizationFaithful(), weylBookkeeping(),      ellSubadditivity(),
            grothendieckSkeleton(), lieDecomposition()};
}

/// One line per criterion; timings are left out so output is reproducible.
inline std::string formatResult(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail;
    return os.str();
}

} // namespace equisym::acceptance

#include "equisym/cli.hpp"
