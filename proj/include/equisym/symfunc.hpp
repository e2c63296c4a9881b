#pragma once

// The ring of symmetric functions in the Schur basis: Littlewood-Richardson
// products, the transpose involution, plethysm through power sums, and the
// degree-truncated series Sym(X) and Lambda^*(V + Lambda^2 V).

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equisym/error.hpp"
#include "equisym/partition.hpp"

namespace equisym {

/// Finite integer combination of Schur functions s_lambda. Zero coefficients
/// are never stored; iteration follows PartitionOrder.
class SymFunc {
public:
    using Terms = std::map<Partition, mpz_class, PartitionOrder>;

    SymFunc() = default;

    /// The basis element s_lambda.
    static SymFunc schur(const Partition& lambda, const mpz_class& coeff = 1) {
        SymFunc f;
        f.add(lambda, coeff);
        return f;
    }
    static SymFunc one() { return schur(Partition{}); }

    const Terms& terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    mpz_class coefficient(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    void add(const Partition& lambda, const mpz_class& coeff) {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(lambda, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Largest degree present; -1 for the zero function.
    int maxDegree() const noexcept { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
    int minDegree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    /// Homogeneous component of degree d.
    SymFunc component(int d) const {
        SymFunc out;
        for (const auto& [lambda, c] : terms_)
            if (lambda.degree() == d)
                out.terms_.emplace(lambda, c);
        return out;
    }

    /// All terms of degree at most d.
    SymFunc truncated(int d) const {
        SymFunc out;
        for (const auto& [lambda, c] : terms_)
            if (lambda.degree() <= d)
                out.terms_.emplace(lambda, c);
        return out;
    }

    SymFunc& operator+=(const SymFunc& other) {
        for (const auto& [lambda, c] : other.terms_)
            add(lambda, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& other) {
        for (const auto& [lambda, c] : other.terms_)
            add(lambda, -c);
        return *this;
    }
    SymFunc& operator*=(const mpz_class& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [lambda, c] : terms_)
            c *= scalar;
        return *this;
    }

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator-(SymFunc a) { return a *= -1; }
    friend SymFunc operator*(const mpz_class& k, SymFunc a) { return a *= k; }
    friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

inline SymFunc completeHomogeneous(int n) { return SymFunc::schur(row(n)); }
inline SymFunc elementary(int n) { return SymFunc::schur(column(n)); }

/// Text form: "+3*s[2,1] -1*s[1,1,1]"; the zero function is "0".
inline std::string formatSymFunc(const SymFunc& f) {
    if (f.isZero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, c] : f.terms()) {
        if (!first)
            os << ' ';
        first = false;
        os << (c > 0 ? "+" : "-") << mpz_class(abs(c)).get_str() << "*s[";
        for (int i = 0; i < lambda.length(); ++i)
            os << (i ? "," : "") << lambda[i];
        os << ']';
    }
    return os.str();
}

/// Parses the text form. Accepts an optional sign and optional "N*" before
/// each "s[...]", so "s[2] - s[1,1]" is also valid.
inline SymFunc parseSymFunc(std::string_view text) {
    SymFunc out;
    std::size_t pos = 0;
    auto skipSpace = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&] { throw UserError("bad symmetric function syntax: '" + std::string(text) + "'"); };
    skipSpace();
    if (text.substr(pos) == "0")
        return out;
    while (true) {
        skipSpace();
        if (pos >= text.size())
            break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skipSpace();
        }
        mpz_class coeff = 1;
        std::size_t digits = pos;
        while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
            ++digits;
        if (digits > pos) {
            coeff = mpz_class(std::string(text.substr(pos, digits - pos)));
            pos = digits;
            skipSpace();
            if (pos >= text.size() || text[pos] != '*')
                fail();
            ++pos;
            skipSpace();
        }
        if (text.substr(pos, 2) != "s[")
            fail();
        pos += 2;
        auto close = text.find(']', pos);
        if (close == std::string_view::npos)
            fail();
        auto inner = text.substr(pos, close - pos);
        out.add(inner.empty() ? Partition{} : parsePartition(inner), sign * coeff);
        pos = close + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson calculus

namespace detail {

// Enumerates LR fillings of nu/lambda with content mu: successive horizontal
// strips of letters 1..l(mu), with the lattice condition on the reverse
// reading word. With a bound, only shapes inside the bound are produced.
class LrEnumerator {
public:
    LrEnumerator(const Partition& lambda, const Partition& mu, const Partition* bound)
        : mu_(mu), bound_(bound) {
        const int rows = lambda.length() + mu.length();
        shape_.assign(static_cast<std::size_t>(rows), 0);
        for (int i = 0; i < lambda.length(); ++i)
            shape_[static_cast<std::size_t>(i)] = lambda[i];
        counts_.assign(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(mu.length()), 0));
    }

    void run(const std::function<void(const std::vector<int>&)>& emit) {
        emit_ = &emit;
        placeLetter(0);
    }

private:
    void placeLetter(int letter) {
        if (letter == mu_.length()) {
            (*emit_)(shape_);
            return;
        }
        const std::vector<int> before = shape_;
        placeRow(letter, before, 0, mu_[letter], 0, 0);
    }

    // before = shape prior to this letter's strip; prevAbove = number of
    // (letter-1)'s in rows strictly above r.
    void placeRow(int letter, const std::vector<int>& before, int r, int remaining, int placedSoFar, int prevAbove) {
        if (remaining == 0) {
            placeLetter(letter + 1);
            return;
        }
        if (r >= static_cast<int>(shape_.size()))
            return;
        const auto ur = static_cast<std::size_t>(r);
        if (r > 0 && before[ur - 1] == 0)
            return;
        const int old = before[ur];
        int maxAdd = remaining;
        if (r > 0)
            maxAdd = std::min(maxAdd, before[ur - 1] - old);
        if (bound_ != nullptr)
            maxAdd = std::min(maxAdd, (*bound_)[r] - old);
        if (letter > 0)
            maxAdd = std::min(maxAdd, prevAbove - placedSoFar);
        const int prevHere = letter > 0 ? counts_[ur][static_cast<std::size_t>(letter - 1)] : 0;
        for (int add = 0; add <= maxAdd; ++add) {
            shape_[ur] = old + add;
            counts_[ur][static_cast<std::size_t>(letter)] = add;
            placeRow(letter, before, r + 1, remaining - add, placedSoFar + add, prevAbove + prevHere);
        }
        shape_[ur] = old;
        counts_[ur][static_cast<std::size_t>(letter)] = 0;
    }

    const Partition& mu_;
    const Partition* bound_;
    std::vector<int> shape_;
    std::vector<std::vector<int>> counts_;
    const std::function<void(const std::vector<int>&)>* emit_ = nullptr;
};

inline Partition trimmed(const std::vector<int>& rows) {
    std::vector<int> parts;
    for (int r : rows)
        if (r > 0)
            parts.push_back(r);
    return Partition(std::move(parts));
}

class ProductCache {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    std::optional<SymFunc> find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }
    void insert(Key key, SymFunc value) {
        std::unique_lock lock(mutex_);
        table_.try_emplace(std::move(key), std::move(value));
    }
    static ProductCache& instance() {
        static ProductCache cache;
        return cache;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, SymFunc> table_;
};

} // namespace detail

/// The Littlewood-Richardson coefficient c^nu_{lambda mu}.
inline mpz_class lrCoeff(const Partition& nu, const Partition& lambda, const Partition& mu) {
    if (nu.degree() != lambda.degree() + mu.degree() || !contains(nu, lambda) || !contains(nu, mu))
        return 0;
    mpz_class count = 0;
    detail::LrEnumerator enumerator(lambda, mu, &nu);
    enumerator.run([&](const std::vector<int>& shape) {
        if (detail::trimmed(shape) == nu)
            ++count;
    });
    return count;
}

/// s_lambda * s_mu expanded in the Schur basis (memoized).
inline SymFunc lrMul(const Partition& lambda, const Partition& mu) {
    // Enumerate with the shorter partition as content.
    const bool swap = mu.length() > lambda.length() || (mu.length() == lambda.length() && mu.degree() > lambda.degree());
    const Partition& outer = swap ? mu : lambda;
    const Partition& content = swap ? lambda : mu;
    detail::ProductCache::Key key{outer.parts(), content.parts()};
    if (auto hit = detail::ProductCache::instance().find(key))
        return *hit;
    SymFunc product;
    detail::LrEnumerator enumerator(outer, content, nullptr);
    enumerator.run([&](const std::vector<int>& shape) { product.add(detail::trimmed(shape), 1); });
    detail::ProductCache::instance().insert(std::move(key), product);
    return product;
}

inline SymFunc lrMul(const SymFunc& f, const SymFunc& g) {
    SymFunc out;
    for (const auto& [lambda, a] : f.terms())
        for (const auto& [mu, b] : g.terms()) {
            const mpz_class ab = a * b;
            const SymFunc product = lrMul(lambda, mu);
            for (const auto& [nu, c] : product.terms())
                out.add(nu, ab * c);
        }
    return out;
}

/// Product truncated to total degree at most maxDeg.
inline SymFunc lrMulTruncated(const SymFunc& f, const SymFunc& g, int maxDeg) {
    SymFunc out;
    for (const auto& [lambda, a] : f.terms())
        for (const auto& [mu, b] : g.terms()) {
            if (lambda.degree() + mu.degree() > maxDeg)
                continue;
            const mpz_class ab = a * b;
            const SymFunc product = lrMul(lambda, mu);
            for (const auto& [nu, c] : product.terms())
                out.add(nu, ab * c);
        }
    return out;
}

/// s_lambda -> s_{lambda^T}, extended linearly.
inline SymFunc transposeInv(const SymFunc& f) {
    SymFunc out;
    for (const auto& [lambda, c] : f.terms())
        out.add(transpose(lambda), c);
    return out;
}

// ---------------------------------------------------------------------------
// Power sums and plethysm

/// Rational combination of power-sum products p_rho.
using PowerSum = std::map<Partition, mpq_class, PartitionOrder>;

/// s_lambda = sum_rho chi^lambda(rho) / z_rho * p_rho.
inline PowerSum toPowerSum(const SymFunc& f) {
    PowerSum out;
    for (const auto& [lambda, c] : f.terms())
        for (const auto& rho : partitionsOf(lambda.degree())) {
            const auto chi = mnCharacter(lambda, rho);
            if (chi == 0)
                continue;
            mpq_class term(c * mpz_class(static_cast<long>(chi)), centralizerOrder(rho));
            term.canonicalize();
            out[rho] += term;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// p_rho = sum_lambda chi^lambda(rho) s_lambda. Throws ConsistencyError if a
/// Schur coefficient comes out non-integral.
inline SymFunc fromPowerSum(const PowerSum& p) {
    std::map<Partition, mpq_class, PartitionOrder> acc;
    for (const auto& [rho, c] : p)
        for (const auto& lambda : partitionsOf(rho.degree())) {
            const auto chi = mnCharacter(lambda, rho);
            if (chi != 0)
                acc[lambda] += c * mpq_class(static_cast<long>(chi));
        }
    SymFunc out;
    for (auto& [lambda, c] : acc) {
        c.canonicalize();
        if (c.get_den() != 1)
            throw ConsistencyError("non-integral Schur coefficient " + c.get_str() + " at s[" + formatPartition(lambda) + "]");
        out.add(lambda, c.get_num());
    }
    return out;
}

namespace detail {

inline Partition mergeParts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

inline PowerSum multiplyTruncated(const PowerSum& a, const PowerSum& b, int maxDeg) {
    PowerSum out;
    for (const auto& [rho, x] : a)
        for (const auto& [sigma, y] : b) {
            if (rho.degree() + sigma.degree() > maxDeg)
                continue;
            out[mergeParts(rho, sigma)] += x * y;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// p_k[g]: every p_j in g becomes p_{kj}.
inline PowerSum scalePowerSum(const PowerSum& g, int k, int maxDeg) {
    PowerSum out;
    for (const auto& [rho, c] : g) {
        if (rho.degree() * k > maxDeg)
            continue;
        std::vector<int> parts = rho.parts();
        for (int& part : parts)
            part *= k;
        out.emplace(Partition(std::move(parts)), c);
    }
    return out;
}

} // namespace detail

/// The plethysm f[g], truncated to degree at most maxDeg. g must have no
/// constant term; a constant term of f passes through unchanged.
inline SymFunc plethysm(const SymFunc& f, const SymFunc& g, int maxDeg) {
    if (g.coefficient(Partition{}) != 0)
        throw UserError("plethysm: inner function must have no constant term");
    if (maxDeg < 0)
        return {};
    const PowerSum fp = toPowerSum(f);
    const PowerSum gp = toPowerSum(g);

    std::map<int, PowerSum> scaled;
    auto pkOfG = [&](int k) -> const PowerSum& {
        auto it = scaled.find(k);
        if (it == scaled.end())
            it = scaled.emplace(k, detail::scalePowerSum(gp, k, maxDeg)).first;
        return it->second;
    };

    PowerSum result;
    for (const auto& [rho, c] : fp) {
        PowerSum term;
        term.emplace(Partition{}, c);
        for (int part : rho.parts()) {
            term = detail::multiplyTruncated(term, pkOfG(part), maxDeg);
            if (term.empty())
                break;
        }
        for (const auto& [sigma, x] : term)
            result[sigma] += x;
    }
    std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
    return fromPowerSum(result);
}

// ---------------------------------------------------------------------------
// Dimension specialization

/// dim of the GL_k-representation V_lambda(C^k), by the hook-content formula.
inline mpz_class glDim(const Partition& lambda, int k) {
    const Partition conj = transpose(lambda);
    mpz_class num = 1;
    mpz_class den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            num *= k + j - i;
            den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
        }
    return num / den;
}

/// f evaluated as a GL_k character at the identity.
inline mpz_class glDim(const SymFunc& f, int k) {
    mpz_class total = 0;
    for (const auto& [lambda, c] : f.terms())
        total += c * glDim(lambda, k);
    return total;
}

// ---------------------------------------------------------------------------
// Graded series

enum class Grading {
    polynomial, ///< component d is homogeneous of degree d
    homological ///< component i of a Koszul-type complex, internal degree mixed
};

/// Components 0..truncationDegree of a graded symmetric-function series.
class GradedSeries {
public:
    GradedSeries(Grading grading, std::vector<SymFunc> components)
        : grading_(grading), components_(std::move(components)) {
        if (components_.empty())
            throw ConsistencyError("graded series needs at least component 0");
    }

    Grading grading() const noexcept { return grading_; }
    int truncationDegree() const noexcept { return static_cast<int>(components_.size()) - 1; }

    /// Component d; negative d gives zero, d beyond the truncation throws.
    const SymFunc& component(int d) const {
        static const SymFunc zero;
        if (d < 0)
            return zero;
        if (d > truncationDegree())
            throw TruncationError("series truncated at degree " + std::to_string(truncationDegree()) +
                                  ", component " + std::to_string(d) + " requested");
        return components_[static_cast<std::size_t>(d)];
    }

    const std::vector<SymFunc>& components() const noexcept { return components_; }

private:
    Grading grading_;
    std::vector<SymFunc> components_;
};

enum class Generator { V, Wedge2, Sym2, VPlusWedge2, VPlusSym2 };

inline std::string_view generatorName(Generator gen) {
    switch (gen) {
    case Generator::V: return "V";
    case Generator::Wedge2: return "wedge2";
    case Generator::Sym2: return "sym2";
    case Generator::VPlusWedge2: return "V+wedge2";
    case Generator::VPlusSym2: return "V+sym2";
    }
    return "?";
}

inline Generator parseGenerator(std::string_view text) {
    for (auto gen : {Generator::V, Generator::Wedge2, Generator::Sym2, Generator::VPlusWedge2, Generator::VPlusSym2})
        if (text == generatorName(gen))
            return gen;
    throw UserError("unknown generator '" + std::string(text) + "' (expected V, wedge2, sym2, V+wedge2, V+sym2)");
}

namespace detail {

// Lazily extended per-degree components; each component is computed once.
class SeriesCache {
public:
    using Builder = std::function<SymFunc(int)>;

    std::vector<SymFunc> prefix(int D, const Builder& build) {
        std::lock_guard lock(mutex_);
        while (static_cast<int>(components_.size()) <= D)
            components_.push_back(build(static_cast<int>(components_.size())));
        return {components_.begin(), components_.begin() + D + 1};
    }

private:
    std::mutex mutex_;
    std::vector<SymFunc> components_;
};

inline SeriesCache& seriesCache(std::size_t slot) {
    static std::array<SeriesCache, 6> caches;
    return caches.at(slot);
}

// Degree-d part of Sym(X) for X homogeneous of degree e.
inline SymFunc symPowerComponent(const SymFunc& generator, int e, int d) {
    if (d == 0)
        return SymFunc::one();
    if (d % e != 0)
        return {};
    return plethysm(completeHomogeneous(d / e), generator, d).component(d);
}

} // namespace detail

/// Degree-truncated symmetric algebra on the generator, graded by polynomial degree.
inline GradedSeries seriesSym(Generator gen, int D) {
    if (D < 0)
        throw UserError("series truncation must be nonnegative");
    const auto slot = static_cast<std::size_t>(gen);
    detail::SeriesCache::Builder build;
    switch (gen) {
    case Generator::V:
        build = [](int d) { return completeHomogeneous(d); };
        break;
    case Generator::Wedge2:
        build = [](int d) { return detail::symPowerComponent(elementary(2), 2, d); };
        break;
    case Generator::Sym2:
        build = [](int d) { return detail::symPowerComponent(completeHomogeneous(2), 2, d); };
        break;
    case Generator::VPlusWedge2:
    case Generator::VPlusSym2: {
        const Generator quadratic = gen == Generator::VPlusWedge2 ? Generator::Wedge2 : Generator::Sym2;
        build = [quadratic](int d) {
            const auto linear = seriesSym(Generator::V, d);
            const auto quad = seriesSym(quadratic, d);
            SymFunc out;
            for (int a = 0; a <= d; ++a)
                out += lrMul(linear.component(a), quad.component(d - a));
            return out;
        };
        break;
    }
    }
    return GradedSeries(Grading::polynomial, detail::seriesCache(slot).prefix(D, build));
}

/// Lambda^i(V + Lambda^2 V) = sum_{a+b=i} e_a * e_b[e_2] for i = 0..D,
/// graded homologically (internal degree between i and 2i).
inline GradedSeries seriesExt(int D) {
    if (D < 0)
        throw UserError("series truncation must be nonnegative");
    auto build = [](int i) {
        SymFunc out;
        for (int a = 0; a <= i; ++a) {
            const int b = i - a;
            const SymFunc wedgeOfWedge2 = b == 0 ? SymFunc::one() : plethysm(elementary(b), elementary(2), 2 * b).component(2 * b);
            out += lrMul(elementary(a), wedgeOfWedge2);
        }
        return out;
    };
    return GradedSeries(Grading::homological, detail::seriesCache(5).prefix(D, build));
}

} // namespace equisym
