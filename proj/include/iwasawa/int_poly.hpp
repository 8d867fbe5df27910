#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iwasawa/bigint.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa {

/// Polynomial over Z, coefficients ascending, no trailing zeros (zero = empty).
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

    static IntPoly from_ints(const std::vector<long long>& v) {
        std::vector<BigInt> c(v.begin(), v.end());
        return IntPoly(std::move(c));
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    bool is_zero() const noexcept { return c.empty(); }
    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < c.size() ? c[i] : BigInt(0); }
    bool is_monic() const { return !c.empty() && c.back() == BigInt(1); }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c.size(), b.c.size()), BigInt(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c.size(), b.c.size()), BigInt(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> r(a.c.size() + b.c.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return IntPoly(std::move(r));
    }

    IntPoly pow_u(unsigned e) const {
        IntPoly r = IntPoly::from_ints({1});
        IntPoly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    BigInt eval(const BigInt& x) const {
        BigInt r(0);
        for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    /// Long division by a monic divisor; exact over Z.
    static std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& d) {
        if (!d.is_monic()) throw InvalidArgument("divmod_monic needs a monic divisor");
        int dd = d.degree();
        if (a.degree() < dd) return {IntPoly(), a};
        std::vector<BigInt> rem = a.c;
        std::vector<BigInt> q(a.c.size() - dd, BigInt(0));
        for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(dd);) {
            BigInt t = rem[i];
            if (t.is_zero()) continue;
            q[i - dd] = t;
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= t * d.c[j];
        }
        rem.resize(dd);
        return {IntPoly(std::move(q)), IntPoly(std::move(rem))};
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += c[i].to_string();
        }
        return out;
    }
};

/// Monic polynomial over Z whose non-leading coefficients are all divisible
/// by p. Degree 0 (the constant 1) is allowed where a trivial distinguished
/// part can occur (Weierstrass preparation of a unit).
struct DistinguishedPoly {
    std::uint64_t p = 3;
    IntPoly poly;

    DistinguishedPoly(std::uint64_t prime, IntPoly f) : p(prime), poly(std::move(f)) {
        require_odd_prime(p);
        validate();
    }

    static DistinguishedPoly from_ints(std::uint64_t p, const std::vector<long long>& coeffs) {
        return DistinguishedPoly(p, IntPoly::from_ints(coeffs));
    }

    int degree() const noexcept { return poly.degree(); }

    void validate() const {
        if (poly.is_zero() || !poly.is_monic())
            throw InvalidArgument("distinguished polynomial must be monic");
        BigInt bp(p);
        for (int i = 0; i < poly.degree(); ++i)
            if (!mod_floor(poly.c[i], bp).is_zero())
                throw InvalidArgument(
                    "non-leading coefficient of a distinguished polynomial must be divisible by p");
    }

    friend bool operator==(const DistinguishedPoly& a, const DistinguishedPoly& b) {
        return a.p == b.p && a.poly == b.poly;
    }
    friend bool operator!=(const DistinguishedPoly& a, const DistinguishedPoly& b) {
        return !(a == b);
    }

    std::string to_string() const { return poly.to_string(); }
};

/// Phi_0 = X.
inline DistinguishedPoly x_poly(std::uint64_t p) {
    return DistinguishedPoly::from_ints(p, {0, 1});
}

namespace detail {
constexpr std::uint64_t kMaxOmegaDegree = 1u << 14;
}

/// omega_n = (1+X)^{p^n} - 1, exact; distinguished of degree p^n.
inline DistinguishedPoly omega(unsigned n, std::uint64_t p) {
    require_odd_prime(p);
    std::uint64_t deg = 1;
    for (unsigned i = 0; i < n; ++i) {
        deg *= p;
        if (deg > detail::kMaxOmegaDegree)
            throw InvalidArgument("omega degree p^n too large");
    }
    // binomial row C(deg, k) built by the exact multiplicative recurrence
    std::vector<BigInt> c(deg + 1, BigInt(0));
    BigInt binom(1);
    for (std::uint64_t k = 0; k <= deg; ++k) {
        c[k] = binom;
        if (k < deg) {
            binom *= BigInt(deg - k);
            auto [q, r] = BigInt::divmod(binom, BigInt(k + 1));
            binom = q;  // exact by construction
        }
    }
    c[0] -= BigInt(1);
    return DistinguishedPoly(p, IntPoly(std::move(c)));
}

/// Phi_n, the p^n-th cyclotomic polynomial evaluated at 1+X; Phi_0 = X.
/// For n >= 1, Phi_n = omega_n / omega_{n-1} (exact division).
inline DistinguishedPoly cyclotomic_phi(unsigned n, std::uint64_t p) {
    require_odd_prime(p);
    if (n == 0) return x_poly(p);
    DistinguishedPoly num = omega(n, p);
    DistinguishedPoly den = omega(n - 1, p);
    auto [q, r] = IntPoly::divmod_monic(num.poly, den.poly);
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    return DistinguishedPoly(p, std::move(q));
}

/// deg Phi_n without building the polynomial: 1 for n = 0, p^{n-1}(p-1) else.
inline std::uint64_t phi_degree(unsigned n, std::uint64_t p) {
    if (n == 0) return 1;
    std::uint64_t d = p - 1;
    for (unsigned i = 1; i < n; ++i) d *= p;
    return d;
}

}  // namespace iwasawa
