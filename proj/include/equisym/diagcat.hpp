#pragma once

// The diagram category C: morphisms [s] -> [t] are signed pairs (injection,
// directed partial matching on the complement of its image). Reversing one
// edge negates the morphism, so every morphism has a normal form with edges
// stored as (min, max).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equisym/error.hpp"
#include "equisym/partition.hpp"

namespace equisym {

using Edge = std::pair<int, int>;

/// Unnormalized morphism data; edges carry an orientation a -> b.
struct RawMorphism {
    int sourceSize = 0;
    int targetSize = 0;
    std::vector<int> injection; ///< 1-based images of 1..sourceSize
    std::vector<Edge> edges;
    int sign = 1;
};

/// Normal form: edges with a < b, sorted; target points in no edge carry xi.
class DiagMorphism {
public:
    int sourceSize() const noexcept { return sourceSize_; }
    int targetSize() const noexcept { return targetSize_; }
    const std::vector<int>& injection() const noexcept { return injection_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    int sign() const noexcept { return sign_; }

    /// Target points covered by neither the injection nor an edge.
    std::vector<int> xiMarked() const {
        std::vector<bool> used(static_cast<std::size_t>(targetSize_) + 1, false);
        for (int v : injection_)
            used[static_cast<std::size_t>(v)] = true;
        for (auto [a, b] : edges_)
            used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
        std::vector<int> out;
        for (int v = 1; v <= targetSize_; ++v)
            if (!used[static_cast<std::size_t>(v)])
                out.push_back(v);
        return out;
    }

    /// Same basis element up to sign.
    bool sameShape(const DiagMorphism& other) const {
        return sourceSize_ == other.sourceSize_ && targetSize_ == other.targetSize_ && injection_ == other.injection_ &&
               edges_ == other.edges_;
    }

    friend bool operator==(const DiagMorphism&, const DiagMorphism&) = default;

private:
    friend DiagMorphism canonicalize(const RawMorphism& raw);

    int sourceSize_ = 0;
    int targetSize_ = 0;
    std::vector<int> injection_;
    std::vector<Edge> edges_;
    int sign_ = 1;
};

/// Validates raw data and puts it in normal form, absorbing one sign flip per
/// reversed edge.
inline DiagMorphism canonicalize(const RawMorphism& raw) {
    if (raw.sourceSize < 0 || raw.targetSize < 0)
        throw UserError("morphism sizes must be nonnegative");
    if (static_cast<int>(raw.injection.size()) != raw.sourceSize)
        throw UserError("injection must list one image per source point");
    if (raw.sign != 1 && raw.sign != -1)
        throw UserError("morphism sign must be +1 or -1");
    std::vector<bool> used(static_cast<std::size_t>(raw.targetSize) + 1, false);
    auto claim = [&](int v, const char* what) {
        if (v < 1 || v > raw.targetSize)
            throw UserError(std::string(what) + " value " + std::to_string(v) + " outside 1.." + std::to_string(raw.targetSize));
        if (used[static_cast<std::size_t>(v)])
            throw UserError("target point " + std::to_string(v) + " used twice (non-injective map or overlapping edges)");
        used[static_cast<std::size_t>(v)] = true;
    };
    for (int v : raw.injection)
        claim(v, "injection");

    DiagMorphism m;
    m.sourceSize_ = raw.sourceSize;
    m.targetSize_ = raw.targetSize;
    m.injection_ = raw.injection;
    m.sign_ = raw.sign;
    for (auto [a, b] : raw.edges) {
        claim(a, "edge");
        claim(b, "edge");
        if (a > b) {
            std::swap(a, b);
            m.sign_ = -m.sign_;
        }
        m.edges_.emplace_back(a, b);
    }
    std::sort(m.edges_.begin(), m.edges_.end());
    return m;
}

inline DiagMorphism identityMorphism(int n) {
    RawMorphism raw{n, n, {}, {}, 1};
    raw.injection.resize(static_cast<std::size_t>(n));
    std::iota(raw.injection.begin(), raw.injection.end(), 1);
    return canonicalize(raw);
}

/// g o f: injection g(f(.)), edges edges(g) together with g(edges(f)) keeping
/// orientation; signs multiply. The complement of the composite image splits
/// as (U \ g(T)) + g(T \ f(S)), so edge sets never interact.
inline DiagMorphism compose(const DiagMorphism& g, const DiagMorphism& f) {
    if (f.targetSize() != g.sourceSize())
        throw UserError("compose: target of f has size " + std::to_string(f.targetSize()) + " but source of g has size " +
                        std::to_string(g.sourceSize()));
    RawMorphism raw;
    raw.sourceSize = f.sourceSize();
    raw.targetSize = g.targetSize();
    raw.sign = f.sign() * g.sign();
    auto gmap = [&](int x) { return g.injection()[static_cast<std::size_t>(x - 1)]; };
    for (int v : f.injection())
        raw.injection.push_back(gmap(v));
    raw.edges = g.edges();
    for (auto [a, b] : f.edges())
        raw.edges.emplace_back(gmap(a), gmap(b));
    return canonicalize(raw);
}

// ---------------------------------------------------------------------------
// Text syntax: "inj=1,2;edges=3>4,5>6;t=6;sign=-1". The target size defaults
// to the largest point mentioned; the sign defaults to +1.

inline DiagMorphism parseMorphism(std::string_view text) {
    RawMorphism raw;
    int explicitTarget = -1;
    int explicitSource = -1;
    auto fail = [&](const std::string& why) { throw UserError("bad morphism '" + std::string(text) + "': " + why); };
    auto parseInt = [&](std::string_view s) {
        if (s.empty())
            fail("empty number");
        int v = 0;
        bool negative = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            negative = s[0] == '-';
            i = 1;
        }
        if (i == s.size())
            fail("empty number");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                fail("expected a number, got '" + std::string(s) + "'");
            v = v * 10 + (s[i] - '0');
            if (v > 1000)
                fail("number too large");
        }
        return negative ? -v : v;
    };
    auto splitOn = [](std::string_view s, char sep) {
        std::vector<std::string_view> parts;
        std::size_t pos = 0;
        while (true) {
            auto next = s.find(sep, pos);
            parts.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
            if (next == std::string_view::npos)
                break;
            pos = next + 1;
        }
        return parts;
    };

    int maxPoint = 0;
    for (auto field : splitOn(text, ';')) {
        if (field.empty())
            continue;
        auto eq = field.find('=');
        if (eq == std::string_view::npos)
            fail("field without '='");
        auto key = field.substr(0, eq);
        auto value = field.substr(eq + 1);
        if (key == "inj") {
            if (!value.empty())
                for (auto item : splitOn(value, ',')) {
                    raw.injection.push_back(parseInt(item));
                    maxPoint = std::max(maxPoint, raw.injection.back());
                }
        } else if (key == "edges") {
            if (!value.empty())
                for (auto item : splitOn(value, ',')) {
                    auto gt = item.find('>');
                    if (gt == std::string_view::npos)
                        fail("edge must be written a>b");
                    Edge e{parseInt(item.substr(0, gt)), parseInt(item.substr(gt + 1))};
                    maxPoint = std::max({maxPoint, e.first, e.second});
                    raw.edges.push_back(e);
                }
        } else if (key == "t") {
            explicitTarget = parseInt(value);
        } else if (key == "s") {
            explicitSource = parseInt(value);
        } else if (key == "sign") {
            raw.sign = parseInt(value);
        } else {
            fail("unknown field '" + std::string(key) + "'");
        }
    }
    raw.sourceSize = static_cast<int>(raw.injection.size());
    if (explicitSource >= 0 && explicitSource != raw.sourceSize)
        fail("s does not match the injection length");
    raw.targetSize = explicitTarget >= 0 ? explicitTarget : maxPoint;
    return canonicalize(raw);
}

inline std::string formatMorphism(const DiagMorphism& m) {
    std::ostringstream os;
    os << "inj=";
    for (std::size_t i = 0; i < m.injection().size(); ++i)
        os << (i ? "," : "") << m.injection()[i];
    os << ";edges=";
    for (std::size_t i = 0; i < m.edges().size(); ++i)
        os << (i ? "," : "") << m.edges()[i].first << '>' << m.edges()[i].second;
    os << ";t=" << m.targetSize() << ";sign=" << (m.sign() > 0 ? "+1" : "-1");
    return os.str();
}

// ---------------------------------------------------------------------------
// Hom spaces

namespace detail {

inline void matchingsRec(std::vector<int>& free, std::vector<Edge>& current, std::vector<std::vector<Edge>>& out) {
    if (free.empty()) {
        auto sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        return;
    }
    const int first = free.front();
    std::vector<int> rest(free.begin() + 1, free.end());
    // first left unmatched (xi-marked)
    matchingsRec(rest, current, out);
    for (std::size_t k = 0; k < rest.size(); ++k) {
        std::vector<int> remaining;
        for (std::size_t j = 0; j < rest.size(); ++j)
            if (j != k)
                remaining.push_back(rest[j]);
        current.emplace_back(first, rest[k]);
        matchingsRec(remaining, current, out);
        current.pop_back();
    }
}

inline void injectionsRec(int s, int t, std::vector<int>& current, std::vector<bool>& used, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == s) {
        out.push_back(current);
        return;
    }
    for (int v = 1; v <= t; ++v) {
        if (used[static_cast<std::size_t>(v)])
            continue;
        used[static_cast<std::size_t>(v)] = true;
        current.push_back(v);
        injectionsRec(s, t, current, used, out);
        current.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
}

} // namespace detail

/// All unoriented partial matchings on the given points, edges as (min, max).
inline std::vector<std::vector<Edge>> partialMatchings(std::vector<int> points) {
    std::sort(points.begin(), points.end());
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> current;
    detail::matchingsRec(points, current, out);
    return out;
}

/// The canonical basis of Hom_C([s], [t]), all with sign +1.
inline std::vector<DiagMorphism> homBasis(int s, int t) {
    if (s < 0 || t < 0)
        throw UserError("homBasis: sizes must be nonnegative");
    std::vector<DiagMorphism> basis;
    if (s > t)
        return basis;
    std::vector<std::vector<int>> injections;
    std::vector<int> current;
    std::vector<bool> used(static_cast<std::size_t>(t) + 1, false);
    detail::injectionsRec(s, t, current, used, injections);
    for (const auto& inj : injections) {
        std::vector<bool> image(static_cast<std::size_t>(t) + 1, false);
        for (int v : inj)
            image[static_cast<std::size_t>(v)] = true;
        std::vector<int> complement;
        for (int v = 1; v <= t; ++v)
            if (!image[static_cast<std::size_t>(v)])
                complement.push_back(v);
        for (auto& matching : partialMatchings(complement))
            basis.push_back(canonicalize(RawMorphism{s, t, inj, std::move(matching), 1}));
    }
    return basis;
}

/// t!/(t-s)! injections times the number of partial matchings on t-s points.
inline mpz_class homDim(int s, int t) {
    if (s < 0 || t < 0)
        throw UserError("homDim: sizes must be nonnegative");
    if (s > t)
        return 0;
    const int r = t - s;
    mpz_class matchings = 0;
    for (int k = 0; 2 * k <= r; ++k) {
        mpz_class two_k;
        mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
        matchings += factorial(r) / (two_k * factorial(k) * factorial(r - 2 * k));
    }
    return factorial(t) / factorial(r) * matchings;
}

/// A permutation of {1..n} (1-based images) with the given cycle type,
/// cycles laid out on consecutive points.
inline std::vector<int> representativePermutation(const Partition& cycleType) {
    std::vector<int> perm(static_cast<std::size_t>(cycleType.degree()));
    int start = 0;
    for (int len : cycleType.parts()) {
        for (int k = 0; k < len; ++k)
            perm[static_cast<std::size_t>(start + k)] = start + (k + 1) % len + 1;
        start += len;
    }
    return perm;
}

/// Trace of b -> tau o b o sigma^{-1} on the signed canonical basis of Hom_C([s],[t]).
inline std::int64_t bimoduleTrace(int s, int t, const Partition& sigma, const Partition& tau) {
    if (sigma.degree() != s || tau.degree() != t)
        throw UserError("bimoduleTrace: cycle types must have sizes s and t");
    const auto sigmaPerm = representativePermutation(sigma);
    const auto tauPerm = representativePermutation(tau);
    std::vector<int> sigmaInv(sigmaPerm.size());
    for (std::size_t k = 0; k < sigmaPerm.size(); ++k)
        sigmaInv[static_cast<std::size_t>(sigmaPerm[k] - 1)] = static_cast<int>(k) + 1;

    std::int64_t trace = 0;
    for (const auto& b : homBasis(s, t)) {
        RawMorphism moved{s, t, {}, {}, b.sign()};
        auto tauOf = [&](int x) { return tauPerm[static_cast<std::size_t>(x - 1)]; };
        for (int k = 1; k <= s; ++k)
            moved.injection.push_back(tauOf(b.injection()[static_cast<std::size_t>(sigmaInv[static_cast<std::size_t>(k - 1)] - 1)]));
        for (auto [x, y] : b.edges())
            moved.edges.emplace_back(tauOf(x), tauOf(y));
        const auto image = canonicalize(moved);
        if (image.sameShape(b))
            trace += image.sign() * b.sign();
    }
    return trace;
}

namespace detail {

// Bimodule character table of Hom_C([m],[n]) over class pairs, cached per (m, n).
class TraceTableCache {
public:
    using Table = std::vector<std::vector<std::int64_t>>;

    const Table& get(int m, int n) {
        std::lock_guard lock(mutex_);
        auto it = tables_.find({m, n});
        if (it != tables_.end())
            return it->second;
        const auto sources = partitionsOf(m);
        const auto targets = partitionsOf(n);
        Table table(sources.size(), std::vector<std::int64_t>(targets.size()));
        for (std::size_t i = 0; i < sources.size(); ++i)
            for (std::size_t j = 0; j < targets.size(); ++j)
                table[i][j] = bimoduleTrace(m, n, sources[i], targets[j]);
        return tables_.emplace(std::pair{m, n}, std::move(table)).first->second;
    }

    static TraceTableCache& instance() {
        static TraceTableCache cache;
        return cache;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, Table> tables_;
};

} // namespace detail

inline constexpr int kDefaultDiagramSizeBound = 7;

/// dim Hom_H(V_lambda, V_mu) as the multiplicity of the (Specht_mu, Specht_lambda)
/// bi-isotype in Hom_C([|mu|], [|lambda|]), by character inner products.
inline mpz_class homHViaC(const Partition& lambda, const Partition& mu, int sizeBound = kDefaultDiagramSizeBound) {
    const int n = lambda.degree();
    const int m = mu.degree();
    if (n > sizeBound || m > sizeBound)
        throw BudgetError("homHViaC: partition sizes " + std::to_string(n) + ", " + std::to_string(m) +
                          " exceed the diagram size bound " + std::to_string(sizeBound));
    if (m > n)
        return 0;
    const auto& table = detail::TraceTableCache::instance().get(m, n);
    const auto sources = cycleTypesOf(m);
    const auto targets = cycleTypesOf(n);
    mpz_class total = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const auto chiMu = mnCharacter(mu, sources[i]);
        if (chiMu == 0)
            continue;
        for (std::size_t j = 0; j < targets.size(); ++j) {
            if (table[i][j] == 0)
                continue;
            const auto chiLambda = mnCharacter(lambda, targets[j]);
            total += sources[i].classSize * targets[j].classSize * mpz_class(static_cast<long>(chiMu)) *
                     mpz_class(static_cast<long>(chiLambda)) * mpz_class(static_cast<long>(table[i][j]));
        }
    }
    const mpz_class order = factorial(m) * factorial(n);
    if (total % order != 0)
        throw ConsistencyError("character inner product is not integral");
    return total / order;
}

} // namespace equisym
