#pragma once

// Integer partitions and symmetric-group character data.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equisym/error.hpp"

namespace equisym {

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw UserError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw UserError("partition parts must be weakly decreasing");
            degree_ += parts_[i];
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int degree() const noexcept { return degree_; }
    /// Number of nonzero parts (rows of the Young diagram).
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based), or 0 beyond the last row.
    int operator[](int i) const noexcept {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// The order used for all enumeration and output: degree descending, then
/// lexicographically descending within a degree. (4) < (3,1) < ... < (1,1,1,1) < (3) < ...
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const noexcept {
        if (a.degree() != b.degree())
            return a.degree() > b.degree();
        return a.parts() > b.parts();
    }
};

/// Column lengths of the Young diagram.
inline Partition transpose(const Partition& lambda) {
    std::vector<int> cols;
    if (!lambda.empty()) {
        cols.resize(static_cast<std::size_t>(lambda[0]), 0);
        for (int row : lambda.parts())
            for (int j = 0; j < row; ++j)
                ++cols[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(cols));
}

/// True if the Young diagram of mu fits inside that of lambda.
inline bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length())
        return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i])
            return false;
    return true;
}

inline bool allRowsEven(const Partition& lambda) {
    return std::all_of(lambda.parts().begin(), lambda.parts().end(), [](int p) { return p % 2 == 0; });
}

inline bool allColumnsEven(const Partition& lambda) { return allRowsEven(transpose(lambda)); }

/// Partition with all parts equal to one: (1^n).
inline Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

/// Single-row partition (n); empty for n = 0.
inline Partition row(int n) { return n == 0 ? Partition{} : Partition{n}; }

namespace detail {

inline void partitionsRec(int remaining, int maxPart, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
        prefix.push_back(p);
        partitionsRec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All partitions of n in lexicographically descending order.
inline std::vector<Partition> partitionsOf(int n) {
    if (n < 0)
        throw UserError("partitionsOf: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::partitionsRec(n, n, prefix, out);
    return out;
}

/// All partitions of size at most n, in PartitionOrder.
inline std::vector<Partition> partitionsUpTo(int n) {
    std::vector<Partition> out;
    for (int d = n; d >= 0; --d) {
        auto block = partitionsOf(d);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

/// Text syntax: comma-separated parts ("3,1"); "-" is the empty partition.
inline Partition parsePartition(std::string_view text) {
    if (text == "-" || text.empty())
        return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (token.empty())
            throw UserError("bad partition syntax: '" + std::string(text) + "'");
        int value = 0;
        for (char c : token) {
            if (c < '0' || c > '9')
                throw UserError("bad partition syntax: '" + std::string(text) + "'");
            value = value * 10 + (c - '0');
            if (value > 1000000)
                throw UserError("partition part too large: '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

inline std::string formatPartition(const Partition& lambda) {
    if (lambda.empty())
        return "-";
    std::ostringstream os;
    for (int i = 0; i < lambda.length(); ++i)
        os << (i ? "," : "") << lambda[i];
    return os.str();
}

inline mpz_class factorial(int n) {
    mpz_class r = 1;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

/// z_rho = prod_k k^{m_k} m_k!, the centralizer order of a permutation of cycle type rho.
inline mpz_class centralizerOrder(const Partition& rho) {
    mpz_class z = 1;
    int i = 0;
    while (i < rho.length()) {
        int k = rho[i];
        int m = 0;
        while (i < rho.length() && rho[i] == k) {
            ++m;
            ++i;
        }
        mpz_class kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
        z *= kpow * factorial(m);
    }
    return z;
}

/// A conjugacy class of S_n, identified by its cycle type.
struct CycleType {
    Partition parts;
    mpz_class classSize;

    explicit CycleType(Partition rho) : parts(std::move(rho)), classSize(factorial(parts.degree()) / centralizerOrder(parts)) {}

    int degree() const noexcept { return parts.degree(); }
};

inline std::vector<CycleType> cycleTypesOf(int n) {
    std::vector<CycleType> out;
    for (auto& rho : partitionsOf(n))
        out.emplace_back(std::move(rho));
    return out;
}

/// Number of standard Young tableaux of shape lambda (hook length formula).
inline mpz_class spechtDim(const Partition& lambda) {
    const Partition conj = transpose(lambda);
    mpz_class hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    return factorial(lambda.degree()) / hooks;
}

namespace detail {

class CharacterCache {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    bool find(const Key& key, std::int64_t& value) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end())
            return false;
        value = it->second;
        return true;
    }

    void insert(Key key, std::int64_t value) {
        std::unique_lock lock(mutex_);
        table_.try_emplace(std::move(key), value);
    }

    static CharacterCache& instance() {
        static CharacterCache cache;
        return cache;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, std::int64_t> table_;
};

// Beta-set (first-column hook lengths) of a partition, decreasing.
inline std::vector<int> betaSet(const std::vector<int>& parts) {
    const int len = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + len - 1 - i;
    return beta;
}

inline std::vector<int> fromBetaSet(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (p > 0)
            parts.push_back(p);
    }
    return parts;
}

// rho is stored weakly decreasing; rim hooks of length rho.back() are removed first
// so the remaining cycle type stays a prefix of the original.
inline std::int64_t mnRec(const std::vector<int>& lambda, std::vector<int> rho) {
    if (rho.empty())
        return lambda.empty() ? 1 : 0;
    CharacterCache::Key key{lambda, rho};
    std::int64_t cached = 0;
    if (CharacterCache::instance().find(key, cached))
        return cached;

    const int k = rho.back();
    rho.pop_back();
    const auto beta = betaSet(lambda);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i])
                ++between;
        auto moved = beta;
        moved[i] = target;
        const std::int64_t sub = mnRec(fromBetaSet(std::move(moved)), rho);
        total += (between % 2 == 0) ? sub : -sub;
    }
    CharacterCache::instance().insert(std::move(key), total);
    return total;
}

} // namespace detail

/// Irreducible character chi^lambda evaluated on the class of cycle type rho
/// (Murnaghan-Nakayama rule, memoized).
inline std::int64_t mnCharacter(const Partition& lambda, const Partition& rho) {
    if (lambda.degree() != rho.degree())
        throw UserError("mnCharacter: |lambda| = " + std::to_string(lambda.degree()) + " but |rho| = " +
                        std::to_string(rho.degree()));
    return detail::mnRec(lambda.parts(), rho.parts());
}

inline std::int64_t mnCharacter(const Partition& lambda, const CycleType& rho) { return mnCharacter(lambda, rho.parts); }

} // namespace equisym
