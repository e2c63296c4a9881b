#pragma once

// Finite-rank ground truth. V_n = C^{2n} with ordered basis e_1, f_1, ...,
// e_n, f_n, the symplectic form omega(e_i, f_j) = delta_ij, and the linear
// form xi = 1 on every basis vector. Everything is exact rational linear
// algebra; tensor slots are big-endian (slot 1 is the most significant digit).

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "equisym/diagcat.hpp"
#include "equisym/error.hpp"
#include "equisym/linalg.hpp"
#include "equisym/partition.hpp"

namespace equisym {

inline constexpr std::uint64_t kDefaultSizeBudget = 200000;

enum class Space { V, W };

inline Space parseSpace(std::string_view text) {
    if (text == "V" || text == "v")
        return Space::V;
    if (text == "W" || text == "w")
        return Space::W;
    throw UserError("unknown space '" + std::string(text) + "' (expected V or W)");
}

/// A finite-dimensional space with an alternating form, in coordinates.
struct FormSpace {
    std::size_t dim = 0;
    ExactMatrix gram;
};

class FiniteModel {
public:
    explicit FiniteModel(int rank) : rank_(rank) {
        if (rank < 1)
            throw UserError("model rank must be at least 1");
        const auto d = dim();
        gram_ = ExactMatrix(d, d);
        for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) {
            gram_(2 * i, 2 * i + 1) = 1;
            gram_(2 * i + 1, 2 * i) = -1;
        }
        xi_.assign(d, mpq_class(1));
    }

    int rank() const noexcept { return rank_; }
    std::size_t dim() const noexcept { return 2 * static_cast<std::size_t>(rank_); }
    const ExactMatrix& gram() const noexcept { return gram_; }
    const std::vector<mpq_class>& xi() const noexcept { return xi_; }

    /// V itself, or W = ker(xi) with basis b_k - b_{2n} (k < 2n) and the restricted form.
    FormSpace space(Space which) const {
        if (which == Space::V)
            return {dim(), gram_};
        const std::size_t d = dim() - 1;
        const std::size_t last = dim() - 1;
        ExactMatrix g(d, d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                g(a, b) = gram_(a, b) - gram_(a, last) - gram_(last, b) + gram_(last, last);
        return {d, std::move(g)};
    }

private:
    int rank_;
    ExactMatrix gram_;
    std::vector<mpq_class> xi_;
};

namespace detail {

inline std::uint64_t checkedPower(std::uint64_t base, int exponent, std::uint64_t budget, const std::string& what) {
    std::uint64_t extent = 1;
    for (int k = 0; k < exponent; ++k) {
        if (extent > budget / (base == 0 ? 1 : base))
            throw BudgetError(what + ": extent " + std::to_string(base) + "^" + std::to_string(exponent) +
                              " exceeds the size budget " + std::to_string(budget));
        extent *= base;
    }
    if (extent > budget)
        throw BudgetError(what + ": extent " + std::to_string(extent) + " exceeds the size budget " + std::to_string(budget));
    return extent;
}

inline std::vector<std::size_t> digits(std::uint64_t index, std::size_t base, int count) {
    std::vector<std::size_t> out(static_cast<std::size_t>(count));
    for (int k = count - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = static_cast<std::size_t>(index % base);
        index /= base;
    }
    return out;
}

inline std::uint64_t undigits(const std::vector<std::size_t>& ds, std::size_t base) {
    std::uint64_t index = 0;
    for (auto x : ds)
        index = index * base + x;
    return index;
}

// All contractions t_{ij} (i < j, slot i first) stacked: rows are
// (pair, remaining multi-index), columns the multi-indices of space^{(x)d}.
inline SparseExactMatrix contractionMatrix(const FormSpace& space, int d, std::uint64_t extent) {
    const std::uint64_t restExtent = d >= 2 ? extent / (space.dim * space.dim) : 0;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            pairs.emplace_back(i, j);
    SparseExactMatrix m(pairs.size() * restExtent, extent);
    for (std::uint64_t col = 0; col < extent; ++col) {
        const auto ds = digits(col, space.dim, d);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto [i, j] = pairs[p];
            const mpq_class& w = space.gram(ds[static_cast<std::size_t>(i)], ds[static_cast<std::size_t>(j)]);
            if (w == 0)
                continue;
            std::vector<std::size_t> rest;
            for (int k = 0; k < d; ++k)
                if (k != i && k != j)
                    rest.push_back(ds[static_cast<std::size_t>(k)]);
            m.add(p * restExtent + undigits(rest, space.dim), col, w);
        }
    }
    return m;
}

inline SparseVector applyColumns(const SparseExactMatrix& m, const SparseVector& v) {
    SparseVector out;
    for (const auto& [c, x] : v)
        for (const auto& [r, y] : m.column(c)) {
            auto& slot = out[r];
            slot += x * y;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline void permutationsRec(std::vector<int>& items, std::size_t k, std::vector<std::vector<int>>& out) {
    if (k == items.size()) {
        out.push_back(items);
        return;
    }
    for (std::size_t i = k; i < items.size(); ++i) {
        std::swap(items[k], items[i]);
        permutationsRec(items, k + 1, out);
        std::swap(items[k], items[i]);
    }
}

// Permutations of {0..d-1} that only permute within each block, with signs.
inline std::vector<std::pair<std::vector<int>, int>> blockPermutations(const std::vector<std::vector<int>>& blocks, int d) {
    std::vector<std::pair<std::vector<int>, int>> result;
    std::vector<int> identity(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        identity[static_cast<std::size_t>(k)] = k;
    result.emplace_back(identity, 1);
    for (const auto& block : blocks) {
        std::vector<std::vector<int>> arrangements;
        auto items = block;
        permutationsRec(items, 0, arrangements);
        std::vector<std::pair<std::vector<int>, int>> next;
        for (const auto& [perm, sign] : result)
            for (const auto& arr : arrangements) {
                auto p = perm;
                for (std::size_t k = 0; k < block.size(); ++k)
                    p[static_cast<std::size_t>(block[k])] = arr[k];
                // sign of the arrangement relative to the block order
                int inversions = 0;
                for (std::size_t a = 0; a < arr.size(); ++a)
                    for (std::size_t b = a + 1; b < arr.size(); ++b)
                        if (arr[a] > arr[b])
                            ++inversions;
                next.emplace_back(std::move(p), inversions % 2 == 0 ? sign : -sign);
            }
        result = std::move(next);
    }
    return result;
}

} // namespace detail

/// Basis (as columns) of the traceless tensors in space^{(x)d}: the joint
/// kernel of every contraction t_{ij}.
inline ExactMatrix tracelessTensors(const FiniteModel& model, Space which, int d, std::uint64_t budget = kDefaultSizeBudget) {
    if (d < 0)
        throw UserError("tensor degree must be nonnegative");
    const auto space = model.space(which);
    const auto extent = detail::checkedPower(space.dim, d, budget, "tracelessTensors");
    if (d < 2)
        return ExactMatrix::identity(extent);
    return kernelBasis(detail::contractionMatrix(space, d, extent).toDense());
}

/// dim of (image of the Young symmetrizer of shape lambda) intersected with the
/// traceless tensors. The symmetrizer uses the row-reading tableau: symmetrize
/// rows, then antisymmetrize columns.
inline std::size_t schurIntersect(const FiniteModel& model, const Partition& lambda, Space which,
                                  std::uint64_t budget = kDefaultSizeBudget) {
    const int d = lambda.degree();
    const auto space = model.space(which);
    const auto extent = detail::checkedPower(space.dim, d, budget, "schurIntersect");

    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(lambda.empty() ? 0 : lambda[0]));
    int cell = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        rows.emplace_back();
        for (int j = 0; j < lambda[i]; ++j, ++cell) {
            rows.back().push_back(cell);
            cols[static_cast<std::size_t>(j)].push_back(cell);
        }
    }
    const auto rowGroup = detail::blockPermutations(rows, d);
    const auto colGroup = detail::blockPermutations(cols, d);

    // pi moves the factor in slot k to slot pi(k).
    auto act = [&](const std::vector<int>& perm, const std::vector<std::size_t>& ds) {
        std::vector<std::size_t> out(ds.size());
        for (std::size_t k = 0; k < ds.size(); ++k)
            out[static_cast<std::size_t>(perm[k])] = ds[k];
        return out;
    };

    SparseSpan image;
    for (std::uint64_t idx = 0; idx < extent; ++idx) {
        const auto ds = detail::digits(idx, space.dim, d);
        SparseVector v;
        for (const auto& [p, ps] : rowGroup) {
            const auto rowed = act(p, ds);
            for (const auto& [q, qs] : colGroup) {
                auto& slot = v[detail::undigits(act(q, rowed), space.dim)];
                slot += qs;
            }
        }
        image.add(std::move(v));
    }
    if (d < 2)
        return image.dimension();
    const auto contraction = detail::contractionMatrix(space, d, extent);
    SparseSpan contracted;
    for (const auto& u : image.basis())
        contracted.add(detail::applyColumns(contraction, u));
    return image.dimension() - contracted.dimension();
}

/// Matrix of K(m): V^{(x)t} -> V^{(x)s}. Injected slots are copied, each edge
/// x -> y contracts with omega(slot x, slot y), remaining slots evaluate xi;
/// the whole map is scaled by the sign of m.
inline SparseExactMatrix realize(const FiniteModel& model, const DiagMorphism& m, std::uint64_t budget = kDefaultSizeBudget) {
    const auto dim = model.dim();
    const auto inExtent = detail::checkedPower(dim, m.targetSize(), budget, "realize");
    const auto outExtent = detail::checkedPower(dim, m.sourceSize(), budget, "realize");
    const auto marked = m.xiMarked();
    SparseExactMatrix out(outExtent, inExtent);
    for (std::uint64_t col = 0; col < inExtent; ++col) {
        const auto ds = detail::digits(col, dim, m.targetSize());
        auto at = [&](int point) { return ds[static_cast<std::size_t>(point - 1)]; };
        mpq_class value = m.sign();
        for (auto [x, y] : m.edges()) {
            value *= model.gram()(at(x), at(y));
            if (value == 0)
                break;
        }
        if (value == 0)
            continue;
        for (int z : marked)
            value *= model.xi()[at(z)];
        std::vector<std::size_t> outDigits;
        for (int v : m.injection())
            outDigits.push_back(at(v));
        out.add(detail::undigits(outDigits, dim), col, value);
    }
    return out;
}

/// K is contravariant: K(g o f) must equal K(f) * K(g).
inline bool checkFunctoriality(const FiniteModel& model, const DiagMorphism& g, const DiagMorphism& f,
                               std::uint64_t budget = kDefaultSizeBudget) {
    return realize(model, compose(g, f), budget) == realize(model, f, budget) * realize(model, g, budget);
}

/// Rank of the realized canonical basis of Hom_C([s],[t]), flattened to vectors.
inline std::size_t realizedHomRank(const FiniteModel& model, int s, int t, std::uint64_t budget = kDefaultSizeBudget) {
    SparseSpan span;
    for (const auto& b : homBasis(s, t))
        span.add(realize(model, b, budget).flatten());
    return span.dimension();
}

/// True iff every contraction t_{ij} on W^{(x)d} has full rank (2n-1)^{d-2}.
inline bool contractionSurjective(const FiniteModel& model, int d, std::uint64_t budget = kDefaultSizeBudget) {
    if (d < 2)
        throw UserError("contractionSurjective needs d >= 2");
    const auto space = model.space(Space::W);
    const auto extent = detail::checkedPower(space.dim, d, budget, "contractionSurjective");
    const std::uint64_t target = extent / (space.dim * space.dim);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            SparseSpan rows;
            // Row space of t_ij: one row per output multi-index.
            std::vector<SparseVector> byRow(target);
            for (std::uint64_t col = 0; col < extent; ++col) {
                const auto ds = detail::digits(col, space.dim, d);
                const mpq_class& w = space.gram(ds[static_cast<std::size_t>(i)], ds[static_cast<std::size_t>(j)]);
                if (w == 0)
                    continue;
                std::vector<std::size_t> rest;
                for (int k = 0; k < d; ++k)
                    if (k != i && k != j)
                        rest.push_back(ds[static_cast<std::size_t>(k)]);
                byRow[detail::undigits(rest, space.dim)][col] = w;
            }
            for (auto& r : byRow)
                rows.add(std::move(r));
            if (rows.dimension() != target)
                return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Weyl dimension formula

/// dim of the irreducible Sp_{2n}-representation with highest weight lambda
/// (0 if lambda has more than n rows).
inline mpz_class spDim(const Partition& lambda, int n) {
    if (lambda.length() > n)
        return 0;
    std::vector<long> l(static_cast<std::size_t>(n));
    std::vector<long> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        l[static_cast<std::size_t>(i)] = lambda[i] + n - i;
        m[static_cast<std::size_t>(i)] = n - i;
    }
    mpq_class dimension = 1;
    for (std::size_t i = 0; i < l.size(); ++i) {
        dimension *= mpq_class(l[i], m[i]);
        for (std::size_t j = i + 1; j < l.size(); ++j)
            dimension *= mpq_class((l[i] - l[j]) * (l[i] + l[j]), (m[i] - m[j]) * (m[i] + m[j]));
    }
    dimension.canonicalize();
    if (dimension.get_den() != 1)
        throw ConsistencyError("Weyl dimension formula produced a non-integer");
    return dimension.get_num();
}

// ---------------------------------------------------------------------------
// sp = k + h

/// Per-index upper-triangular part Y in k and the xi-stabilizing part Z in h.
struct LieDecomposition {
    ExactMatrix y;
    ExactMatrix z;
};

inline bool isSymplecticLie(const FiniteModel& model, const ExactMatrix& x) {
    const auto& j = model.gram();
    if (x.rows() != j.rows() || x.cols() != j.cols())
        return false;
    return (x.transposed() * j + j * x).isZero();
}

/// Splits X in sp_{2n} as Z = X + Y where Y has blocks [[t, u], [0, -t]] on
/// (e_i, f_i) and every row of Z sums to zero: t = r2, u = -r1 - r2 for the
/// row sums r1, r2 of rows 2i-1, 2i of X.
inline LieDecomposition lieDecompose(int n, const ExactMatrix& x) {
    const FiniteModel model(n);
    if (!isSymplecticLie(model, x))
        throw UserError("lieDecompose: matrix is not in sp_" + std::to_string(2 * n));
    const auto d = model.dim();
    ExactMatrix y(d, d);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        mpq_class r1 = 0;
        mpq_class r2 = 0;
        for (std::size_t c = 0; c < d; ++c) {
            r1 += x(2 * i, c);
            r2 += x(2 * i + 1, c);
        }
        const mpq_class t = r2;
        const mpq_class u = -r1 - r2;
        y(2 * i, 2 * i) = t;
        y(2 * i, 2 * i + 1) = u;
        y(2 * i + 1, 2 * i + 1) = -t;
    }
    ExactMatrix z = x + y;
    return {std::move(y), std::move(z)};
}

namespace detail {

// Kernel of a linear map on 2n x 2n matrices given by constraint rows on the
// row-major flattening; returns the kernel as a list of matrices.
inline std::vector<ExactMatrix> matrixKernel(std::size_t d, const ExactMatrix& constraints) {
    const auto basis = kernelBasis(constraints);
    std::vector<ExactMatrix> out;
    for (std::size_t k = 0; k < basis.cols(); ++k) {
        ExactMatrix m(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                m(r, c) = basis(r * d + c, k);
        out.push_back(std::move(m));
    }
    return out;
}

inline ExactMatrix symplecticConstraints(const FiniteModel& model, bool rowSumsZero) {
    const auto d = model.dim();
    const auto& j = model.gram();
    // (X^T J + J X)_{ab} = sum_k X_{ka} J_{kb} + J_{ak} X_{kb}
    ExactMatrix rows(d * d + (rowSumsZero ? d : 0), d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t k = 0; k < d; ++k) {
                rows(a * d + b, k * d + a) += j(k, b);
                rows(a * d + b, k * d + b) += j(a, k);
            }
    if (rowSumsZero)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                rows(d * d + r, r * d + c) = 1;
    return rows;
}

} // namespace detail

/// A basis of sp_{2n} for the model's form.
inline std::vector<ExactMatrix> symplecticLieBasis(int n) {
    const FiniteModel model(n);
    return detail::matrixKernel(model.dim(), detail::symplecticConstraints(model, false));
}

/// A basis of h_n: elements of sp_{2n} with every row sum zero.
inline std::vector<ExactMatrix> stabilizerLieBasis(int n) {
    const FiniteModel model(n);
    return detail::matrixKernel(model.dim(), detail::symplecticConstraints(model, true));
}

/// The 2n generators of k_n: diag(1,-1) and the upper corner on each (e_i, f_i) block.
inline std::vector<ExactMatrix> borelLieBasis(int n) {
    const std::size_t d = 2 * static_cast<std::size_t>(n);
    std::vector<ExactMatrix> out;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        ExactMatrix t(d, d);
        t(2 * i, 2 * i) = 1;
        t(2 * i + 1, 2 * i + 1) = -1;
        out.push_back(std::move(t));
        ExactMatrix u(d, d);
        u(2 * i, 2 * i + 1) = 1;
        out.push_back(std::move(u));
    }
    return out;
}

/// Random element of sp_{2n}: integer combination (entries in [-5, 5]) of the basis.
inline ExactMatrix randomSymplecticLie(int n, std::mt19937_64& rng) {
    const auto basis = symplecticLieBasis(n);
    std::uniform_int_distribution<int> coeff(-5, 5);
    const std::size_t d = 2 * static_cast<std::size_t>(n);
    ExactMatrix x(d, d);
    for (const auto& b : basis) {
        const mpq_class c = coeff(rng);
        if (c == 0)
            continue;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t col = 0; col < d; ++col)
                if (b(r, col) != 0)
                    x(r, col) += c * b(r, col);
    }
    return x;
}

/// Rank of a family of matrices viewed as vectors.
inline std::size_t matrixFamilyRank(const std::vector<ExactMatrix>& family) {
    SparseSpan span;
    for (const auto& m : family) {
        SparseVector v;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m(r, c) != 0)
                    v.emplace(r * m.cols() + c, m(r, c));
        span.add(std::move(v));
    }
    return span.dimension();
}

/// Random composable pair (g, f) with all sizes at most maxSize.
inline std::pair<DiagMorphism, DiagMorphism> randomComposablePair(int maxSize, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> sizeDist(0, maxSize);
    int a = sizeDist(rng);
    int b = sizeDist(rng);
    int c = sizeDist(rng);
    if (a > b)
        std::swap(a, b);
    if (b > c)
        std::swap(b, c);
    if (a > b)
        std::swap(a, b);
    auto randomMorphism = [&](int s, int t) {
        std::vector<int> points(static_cast<std::size_t>(t));
        std::iota(points.begin(), points.end(), 1);
        std::shuffle(points.begin(), points.end(), rng);
        RawMorphism raw{s, t, {}, {}, 1};
        raw.injection.assign(points.begin(), points.begin() + s);
        std::vector<int> rest(points.begin() + s, points.end());
        std::bernoulli_distribution coin(0.5);
        for (std::size_t k = 0; k + 1 < rest.size(); k += 2)
            if (coin(rng))
                raw.edges.emplace_back(rest[k], rest[k + 1]);
        raw.sign = coin(rng) ? 1 : -1;
        return canonicalize(raw);
    };
    auto f = randomMorphism(a, b);
    auto g = randomMorphism(b, c);
    return {std::move(g), std::move(f)};
}

} // namespace equisym
