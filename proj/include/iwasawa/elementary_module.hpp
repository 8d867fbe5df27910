#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iwasawa/errors.hpp"
#include "iwasawa/int_poly.hpp"
#include "iwasawa/weierstrass.hpp"

namespace iwasawa {

/// One cyclic torsion block Lambda/F^beta of the structure theorem.
struct TorsionPart {
    DistinguishedPoly poly;
    int beta = 1;
    bool irreducible_asserted = true;  // assertion recorded, never verified

    TorsionPart(DistinguishedPoly f, int b, bool asserted = true)
        : poly(std::move(f)), beta(b), irreducible_asserted(asserted) {
        if (beta < 1) throw InvalidArgument("torsion exponent beta must be >= 1");
        if (poly.degree() < 1)
            throw InvalidArgument("torsion part needs a distinguished polynomial of degree >= 1");
    }
};

inline bool lex_less(const IntPoly& a, const IntPoly& b) {
    std::size_t n = std::min(a.c.size(), b.c.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return a.c.size() < b.c.size();
}

/// Structure-theorem data of a finitely generated Lambda-module over
/// O unramified of residue degree f (q = p^f):
///   Lambda^a (+) sum Lambda/p^{alpha_i} (+) sum Lambda/F_j^{beta_j}.
/// Canonical form: mu exponents descending, torsion parts ordered by
/// (coefficients lexicographic, beta descending). Pseudo-isomorphism classes
/// are equality of canonical data.
struct ElementaryModule {
    std::uint64_t p = 3;
    int residue_exponent = 1;  // f, with q = p^f
    int free_rank = 0;
    std::vector<int> mu_exponents;
    std::vector<TorsionPart> torsion_parts;

    ElementaryModule(std::uint64_t prime, int f, int a, std::vector<int> mu,
                     std::vector<TorsionPart> parts)
        : p(prime),
          residue_exponent(f),
          free_rank(a),
          mu_exponents(std::move(mu)),
          torsion_parts(std::move(parts)) {
        require_odd_prime(p);
        if (residue_exponent < 1) throw InvalidArgument("residue exponent f must be >= 1");
        if (free_rank < 0) throw InvalidArgument("free rank must be >= 0");
        for (int a_i : mu_exponents)
            if (a_i < 1) throw InvalidArgument("mu exponent must be >= 1");
        for (const auto& t : torsion_parts)
            if (t.poly.p != p) throw PrimeMismatch("torsion part prime differs from module prime");
        canonicalize();
    }

    static ElementaryModule zero(std::uint64_t p, int f = 1) {
        return ElementaryModule(p, f, 0, {}, {});
    }

    bool is_torsion() const noexcept { return free_rank == 0; }
    bool is_zero() const noexcept {
        return free_rank == 0 && mu_exponents.empty() && torsion_parts.empty();
    }

    void canonicalize() {
        std::sort(mu_exponents.begin(), mu_exponents.end(), std::greater<int>());
        std::sort(torsion_parts.begin(), torsion_parts.end(),
                  [](const TorsionPart& x, const TorsionPart& y) {
                      if (x.poly.poly != y.poly.poly) return lex_less(x.poly.poly, y.poly.poly);
                      return x.beta > y.beta;
                  });
    }

    friend bool operator==(const ElementaryModule& a, const ElementaryModule& b) {
        if (a.p != b.p || a.residue_exponent != b.residue_exponent ||
            a.free_rank != b.free_rank || a.mu_exponents != b.mu_exponents ||
            a.torsion_parts.size() != b.torsion_parts.size())
            return false;
        for (std::size_t i = 0; i < a.torsion_parts.size(); ++i) {
            if (a.torsion_parts[i].poly != b.torsion_parts[i].poly ||
                a.torsion_parts[i].beta != b.torsion_parts[i].beta)
                return false;
        }
        return true;
    }
    friend bool operator!=(const ElementaryModule& a, const ElementaryModule& b) {
        return !(a == b);
    }

    std::string to_string() const {
        std::string out = "p=" + std::to_string(p) + " f=" + std::to_string(residue_exponent) +
                          " free=" + std::to_string(free_rank) + " mu=[";
        for (std::size_t i = 0; i < mu_exponents.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(mu_exponents[i]);
        }
        out += "] torsion=[";
        for (std::size_t i = 0; i < torsion_parts.size(); ++i) {
            if (i) out += ",";
            out += "(" + torsion_parts[i].poly.to_string() + ")^" +
                   std::to_string(torsion_parts[i].beta);
        }
        return out + "]";
    }
};

inline ElementaryModule direct_sum(const ElementaryModule& a, const ElementaryModule& b) {
    if (a.p != b.p || a.residue_exponent != b.residue_exponent)
        throw PrimeMismatch("direct sum needs matching (p, f)");
    std::vector<int> mu = a.mu_exponents;
    mu.insert(mu.end(), b.mu_exponents.begin(), b.mu_exponents.end());
    std::vector<TorsionPart> parts = a.torsion_parts;
    parts.insert(parts.end(), b.torsion_parts.begin(), b.torsion_parts.end());
    return ElementaryModule(a.p, a.residue_exponent, a.free_rank + b.free_rank, std::move(mu),
                            std::move(parts));
}

/// mu-invariant: total exponent of the p-power blocks.
inline long long mu_invariant(const ElementaryModule& m) {
    long long s = 0;
    for (int a : m.mu_exponents) s += a;
    return s;
}

/// lambda-invariant: total distinguished degree of the torsion blocks.
inline long long lambda_invariant(const ElementaryModule& m) {
    long long s = 0;
    for (const auto& t : m.torsion_parts) s += static_cast<long long>(t.beta) * t.poly.degree();
    return s;
}

/// M(F^infty): the blocks whose polynomial equals F exactly.
inline ElementaryModule f_part(const ElementaryModule& m, const DistinguishedPoly& F) {
    std::vector<TorsionPart> parts;
    for (const auto& t : m.torsion_parts)
        if (t.poly == F) parts.push_back(t);
    return ElementaryModule(m.p, m.residue_exponent, 0, {}, std::move(parts));
}

/// M(p^infty): the p-power blocks.
inline ElementaryModule pi_part(const ElementaryModule& m) {
    return ElementaryModule(m.p, m.residue_exponent, 0, m.mu_exponents, {});
}

/// Characteristic ideal in factored form: p^{mu_total} * prod F^e with equal
/// F's aggregated.
struct CharIdeal {
    long long mu_total = 0;
    std::vector<std::pair<DistinguishedPoly, int>> distinguished_factors;

    std::string to_string() const {
        std::string out = "pi^" + std::to_string(mu_total);
        for (const auto& [f, e] : distinguished_factors)
            out += " (" + f.to_string() + ")^" + std::to_string(e);
        return out;
    }
};

inline CharIdeal char_ideal(const ElementaryModule& m) {
    if (!m.is_torsion()) throw NotTorsion("characteristic ideal needs a torsion module");
    CharIdeal c;
    c.mu_total = mu_invariant(m);
    for (const auto& t : m.torsion_parts) {
        bool merged = false;
        for (auto& [f, e] : c.distinguished_factors) {
            if (f == t.poly) {
                e += t.beta;
                merged = true;
                break;
            }
        }
        if (!merged) c.distinguished_factors.emplace_back(t.poly, t.beta);
    }
    std::sort(c.distinguished_factors.begin(), c.distinguished_factors.end(),
              [](const auto& x, const auto& y) { return lex_less(x.first.poly, y.first.poly); });
    return c;
}

inline bool operator==(const CharIdeal& a, const CharIdeal& b) {
    if (a.mu_total != b.mu_total ||
        a.distinguished_factors.size() != b.distinguished_factors.size())
        return false;
    for (std::size_t i = 0; i < a.distinguished_factors.size(); ++i)
        if (a.distinguished_factors[i].first != b.distinguished_factors[i].first ||
            a.distinguished_factors[i].second != b.distinguished_factors[i].second)
            return false;
    return true;
}

/// M^iota: each torsion block Lambda/F^beta becomes Lambda/(F^iota)^beta; the
/// p-power blocks and free rank are untouched. Coefficients of F^iota are
/// canonical residues mod p^precision (0 picks a per-part default). The twist
/// is involutive when both applications share a precision that covers the
/// original coefficients.
inline ElementaryModule iota_twist(const ElementaryModule& m, int precision = 0) {
    std::vector<TorsionPart> parts;
    parts.reserve(m.torsion_parts.size());
    for (const auto& t : m.torsion_parts) {
        int a = precision > 0 ? precision : iota_default_precision(t.poly);
        parts.emplace_back(iota_normalize(t.poly, a), t.beta, t.irreducible_asserted);
    }
    return ElementaryModule(m.p, m.residue_exponent, m.free_rank, m.mu_exponents,
                            std::move(parts));
}

}  // namespace iwasawa
