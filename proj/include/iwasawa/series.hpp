#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iwasawa/bigint.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/int_poly.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa {

/// Truncated element of Lambda = Z_p[[X]]: coefficients are known modulo
/// p^p_precision for exponents below x_precision. Stored reduced to
/// canonical residues in [0, p^a).
class LambdaSeries {
public:
    LambdaSeries(std::uint64_t p, int p_precision, int x_precision, std::vector<BigInt> coeffs)
        : p_(p), a_(p_precision), b_(x_precision), c_(std::move(coeffs)) {
        require_odd_prime(p_);
        if (a_ < 1) throw InsufficientPrecision("LambdaSeries needs p-precision >= 1");
        if (b_ < 1) throw InsufficientPrecision("LambdaSeries needs x-precision >= 1");
        if (static_cast<int>(c_.size()) > b_) c_.resize(b_);
        reduce();
    }

    static LambdaSeries zero(std::uint64_t p, int a, int b) { return LambdaSeries(p, a, b, {}); }

    static LambdaSeries from_ints(std::uint64_t p, int a, int b,
                                  const std::vector<long long>& v) {
        std::vector<BigInt> c(v.begin(), v.end());
        return LambdaSeries(p, a, b, std::move(c));
    }

    /// Reduction of an exact integer polynomial into the truncated ring.
    static LambdaSeries from_poly(const IntPoly& f, std::uint64_t p, int a, int b) {
        return LambdaSeries(p, a, b, f.c);
    }
    static LambdaSeries from_poly(const DistinguishedPoly& f, int a, int b) {
        return from_poly(f.poly, f.p, a, b);
    }

    std::uint64_t prime() const noexcept { return p_; }
    int p_precision() const noexcept { return a_; }
    int x_precision() const noexcept { return b_; }
    BigInt modulus() const { return BigInt::pow(BigInt(p_), static_cast<unsigned long long>(a_)); }

    /// Number of stored coefficients (trailing zeros may be dropped).
    std::size_t stored_size() const noexcept { return c_.size(); }

    BigInt coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigInt(0);
    }
    PadicInt coeff_padic(int i) const { return PadicInt(p_, a_, coeff(i)); }

    bool is_zero_within_precision() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// min over stored coefficients of v_p, capped at p-precision.
    int min_valuation() const {
        int mv = a_;
        for (const auto& x : c_) {
            int v = valuation_capped(x, p_, a_);
            if (v < mv) mv = v;
            if (mv == 0) break;
        }
        return mv;
    }

    LambdaSeries with_precision(int a, int b) const {
        if (a > a_ || b > b_) throw InsufficientPrecision("cannot raise series precision");
        return LambdaSeries(p_, a, b, c_);
    }

    friend LambdaSeries operator+(const LambdaSeries& x, const LambdaSeries& y) {
        auto [a, b] = common(x, y);
        std::vector<BigInt> r(std::min<std::size_t>(b, std::max(x.c_.size(), y.c_.size())),
                              BigInt(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.coeff(static_cast<int>(i)) + y.coeff(static_cast<int>(i));
        return LambdaSeries(x.p_, a, b, std::move(r));
    }

    friend LambdaSeries operator-(const LambdaSeries& x, const LambdaSeries& y) {
        auto [a, b] = common(x, y);
        std::vector<BigInt> r(std::min<std::size_t>(b, std::max(x.c_.size(), y.c_.size())),
                              BigInt(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.coeff(static_cast<int>(i)) - y.coeff(static_cast<int>(i));
        return LambdaSeries(x.p_, a, b, std::move(r));
    }

    friend LambdaSeries operator*(const LambdaSeries& x, const LambdaSeries& y) {
        auto [a, b] = common(x, y);
        std::size_t len = (x.c_.empty() || y.c_.empty()) ? 0 : x.c_.size() + y.c_.size() - 1;
        std::vector<BigInt> r(std::min<std::size_t>(static_cast<std::size_t>(b), len), BigInt(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.c_.size() && i + j < r.size(); ++j)
                r[i + j] += x.c_[i] * y.c_[j];
        }
        return LambdaSeries(x.p_, a, b, std::move(r));
    }

    friend LambdaSeries operator*(const PadicInt& s, const LambdaSeries& x) {
        if (s.prime() != x.p_) throw PrimeMismatch("scalar and series have different primes");
        int a = std::min(s.precision(), x.a_);
        std::vector<BigInt> r = x.c_;
        for (auto& v : r) v = v * s.value();
        return LambdaSeries(x.p_, a, x.b_, std::move(r));
    }

    friend bool operator==(const LambdaSeries& x, const LambdaSeries& y) {
        return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }
    friend bool operator!=(const LambdaSeries& x, const LambdaSeries& y) { return !(x == y); }

    /// Coefficientwise congruence mod (p^a, X^b) for the overlap of the
    /// stated precisions; the usual notion of equality between approximations.
    friend bool congruent(const LambdaSeries& x, const LambdaSeries& y) {
        if (x.p_ != y.p_) return false;
        auto [a, b] = common(x, y);
        BigInt m = BigInt::pow(BigInt(x.p_), static_cast<unsigned long long>(a));
        for (int i = 0; i < b; ++i)
            if (mod_floor(x.coeff(i) - y.coeff(i), m) != BigInt(0)) return false;
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
            if (i) out += ",";
            out += c_[i].to_string();
        }
        if (c_.empty()) out = "0";
        return out + " mod (" + std::to_string(p_) + "^" + std::to_string(a_) + ", X^" +
               std::to_string(b_) + ")";
    }

private:
    std::uint64_t p_;
    int a_;
    int b_;
    std::vector<BigInt> c_;

    void reduce() {
        BigInt m = modulus();
        for (auto& x : c_) x = mod_floor(x, m);
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    static std::pair<int, int> common(const LambdaSeries& x, const LambdaSeries& y) {
        if (x.p_ != y.p_) throw PrimeMismatch("series operands have different primes");
        return {std::min(x.a_, y.a_), std::min(x.b_, y.b_)};
    }
};

/// The substitution X -> (1+X)^{-1} - 1 applied to a distinguished
/// polynomial, expanded in the truncated ring. The image of X itself is the
/// geometric series -X + X^2 - X^3 + ...
inline LambdaSeries iota_apply(const DistinguishedPoly& F, int a, int b) {
    if (a < 1 || b < 1) throw InsufficientPrecision("iota_apply needs positive precision");
    std::vector<BigInt> sc(b, BigInt(0));
    for (int k = 1; k < b; ++k) sc[k] = (k % 2) ? BigInt(-1) : BigInt(1);
    LambdaSeries s(F.p, a, b, std::move(sc));
    // Horner from the leading coefficient down
    LambdaSeries r = LambdaSeries::zero(F.p, a, b);
    for (int i = F.degree(); i >= 0; --i) {
        r = r * s;
        r = r + LambdaSeries(F.p, a, b, {F.poly.coeff(static_cast<std::size_t>(i))});
    }
    return r;
}

}  // namespace iwasawa
