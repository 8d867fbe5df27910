#pragma once

#include <cstdint>
#include <string>

#include "iwasawa/bigint.hpp"
#include "iwasawa/errors.hpp"

namespace iwasawa {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_odd_prime(std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p)) throw InvalidArgument("p must be an odd prime");
}

/// Inverse of a unit u modulo p^a, by inverting mod p (Euclid) and Hensel
/// lifting z -> z(2 - uz), which doubles the p-adic accuracy per step.
inline BigInt unit_inverse_mod(const BigInt& u, std::uint64_t p, int a) {
    if (a < 1) throw InsufficientPrecision("modular inverse needs precision >= 1");
    BigInt pa = BigInt::pow(BigInt(p), static_cast<unsigned long long>(a));
    BigInt ur = mod_floor(u, pa);
    std::uint64_t u0 = mod_floor(ur, BigInt(p)).to_u64();
    if (u0 == 0) throw NotUnit("cannot invert a non-unit mod p^a");
    // extended Euclid mod p on machine words
    std::int64_t t0 = 0, t1 = 1;
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(u0);
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tr = r0 - q * r1;
        r0 = r1;
        r1 = tr;
        std::int64_t tt = t0 - q * t1;
        t0 = t1;
        t1 = tt;
    }
    std::int64_t inv0 = t0 % static_cast<std::int64_t>(p);
    if (inv0 < 0) inv0 += static_cast<std::int64_t>(p);
    BigInt z(inv0);
    int have = 1;
    while (have < a) {
        have *= 2;
        BigInt m = have >= a ? pa : BigInt::pow(BigInt(p), static_cast<unsigned long long>(have));
        z = mod_floor(z * (BigInt(2) - ur * z), m);
    }
    return mod_floor(z, pa);
}

/// Element of Z_p known modulo p^a. Immutable value semantics; arithmetic
/// carries the minimum of the operand precisions, division additionally pays
/// the divisor's valuation.
class PadicInt {
public:
    PadicInt(std::uint64_t p, int precision, BigInt value)
        : p_(p), prec_(precision), v_(std::move(value)) {
        require_odd_prime(p_);
        if (prec_ < 1) throw InsufficientPrecision("PadicInt precision must be >= 1");
        v_ = mod_floor(v_, modulus());
    }

    std::uint64_t prime() const noexcept { return p_; }
    int precision() const noexcept { return prec_; }
    const BigInt& value() const noexcept { return v_; }
    BigInt modulus() const { return BigInt::pow(BigInt(p_), static_cast<unsigned long long>(prec_)); }

    bool is_zero() const noexcept { return v_.is_zero(); }
    bool is_unit() const { return !mod_floor(v_, BigInt(p_)).is_zero(); }

    /// min(v_p(value), precision); the residue 0 reports full precision.
    int valuation() const { return valuation_capped(v_, p_, prec_); }

    PadicInt with_precision(int a) const {
        if (a > prec_)
            throw InsufficientPrecision("cannot raise p-adic precision");
        return PadicInt(p_, a, v_);
    }

    friend PadicInt operator+(const PadicInt& a, const PadicInt& b) {
        int prec = common(a, b);
        return PadicInt(a.p_, prec, a.v_ + b.v_);
    }
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b) {
        int prec = common(a, b);
        return PadicInt(a.p_, prec, a.v_ - b.v_);
    }
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b) {
        int prec = common(a, b);
        return PadicInt(a.p_, prec, a.v_ * b.v_);
    }
    PadicInt operator-() const { return PadicInt(p_, prec_, -v_); }

    /// Multiplicative inverse of a unit, at this precision.
    PadicInt inverse() const {
        return PadicInt(p_, prec_, unit_inverse_mod(v_, p_, prec_));
    }

    /// a / b where v_p(a) >= v_p(b); the result loses v_p(b) digits of
    /// precision, mirroring the valuation bookkeeping of Weierstrass theory.
    friend PadicInt divide(const PadicInt& a, const PadicInt& b) {
        int prec = common(a, b);
        int vb = b.valuation();
        if (vb >= prec)
            throw InsufficientPrecision("division by a value that is zero within precision");
        int va = valuation_capped(a.v_, a.p_, prec);
        if (va < vb) throw InvalidArgument("quotient is not a p-adic integer");
        int out = prec - vb;
        BigInt pv = BigInt::pow(BigInt(a.p_), static_cast<unsigned long long>(vb));
        BigInt an = a.v_ / pv;
        BigInt bn = b.v_ / pv;
        BigInt inv = unit_inverse_mod(bn, a.p_, out);
        return PadicInt(a.p_, out, an * inv);
    }

    friend bool operator==(const PadicInt& a, const PadicInt& b) {
        return a.p_ == b.p_ && a.prec_ == b.prec_ && a.v_ == b.v_;
    }
    friend bool operator!=(const PadicInt& a, const PadicInt& b) { return !(a == b); }

    std::string to_string() const {
        return v_.to_string() + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
    }

private:
    std::uint64_t p_;
    int prec_;
    BigInt v_;

    static int common(const PadicInt& a, const PadicInt& b) {
        if (a.p_ != b.p_) throw PrimeMismatch("PadicInt operands have different primes");
        return a.prec_ < b.prec_ ? a.prec_ : b.prec_;
    }
};

}  // namespace iwasawa
