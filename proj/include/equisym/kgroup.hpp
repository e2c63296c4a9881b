#pragma once

// K(A) as the free Lambda-module with basis [C] (torsion) and [A] (free).
// Coefficients are kept in the Schur basis, s_lambda <-> [V_lambda].

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equisym/error.hpp"
#include "equisym/partition.hpp"
#include "equisym/symfunc.hpp"

namespace equisym {

struct KClassA {
    SymFunc torsionPart; ///< coefficient of [C]
    SymFunc freePart;    ///< coefficient of [A]

    KClassA& operator+=(const KClassA& o) {
        torsionPart += o.torsionPart;
        freePart += o.freePart;
        return *this;
    }
    KClassA& operator-=(const KClassA& o) {
        torsionPart -= o.torsionPart;
        freePart -= o.freePart;
        return *this;
    }
    friend KClassA operator+(KClassA a, const KClassA& b) { return a += b; }
    friend KClassA operator-(KClassA a, const KClassA& b) { return a -= b; }
    friend bool operator==(const KClassA&, const KClassA&) = default;
};

/// [V (x) A].
inline KClassA classFree(const SymFunc& v) { return {SymFunc{}, v}; }

/// [V] for V a torsion module killed by A_+.
inline KClassA classTorsion(const SymFunc& v) { return {v, SymFunc{}}; }

/// gamma([M]) = sum (-1)^i [R^i Gamma(M)]: identity on torsion classes, zero on
/// the saturated modules V (x) A.
inline SymFunc gamma(const KClassA& c) { return c.torsionPart; }

/// Image in K of the generic category, with basis [T(A)].
inline SymFunc pi(const KClassA& c) { return c.freePart; }

/// Lambda-module structure: [V] . [M] = [V (x) M].
inline KClassA act(const SymFunc& f, const KClassA& c) { return {lrMul(f, c.torsionPart), lrMul(f, c.freePart)}; }

struct SignedClass {
    int sign = 1;
    KClassA cls;
};

/// Signed sum of the classes of a bounded complex.
inline KClassA eulerOfComplex(const std::vector<SignedClass>& terms) {
    KClassA total;
    for (const auto& [sign, cls] : terms) {
        if (sign == 1)
            total += cls;
        else if (sign == -1)
            total -= cls;
        else
            throw UserError("complex term sign must be +1 or -1");
    }
    return total;
}

/// Term syntax "+free:1,1" or "-torsion:-"; the sign is optional.
inline SignedClass parseSignedClass(std::string_view text) {
    SignedClass out;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        out.sign = text[0] == '-' ? -1 : 1;
        text.remove_prefix(1);
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw UserError("complex term must look like +free:LAMBDA or -torsion:LAMBDA");
    const auto kind = text.substr(0, colon);
    const auto lambda = parsePartition(text.substr(colon + 1));
    if (kind == "free")
        out.cls = classFree(SymFunc::schur(lambda));
    else if (kind == "torsion")
        out.cls = classTorsion(SymFunc::schur(lambda));
    else
        throw UserError("unknown class kind '" + std::string(kind) + "' (expected free or torsion)");
    return out;
}

} // namespace equisym
