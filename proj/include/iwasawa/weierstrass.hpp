#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "iwasawa/bigint.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/int_poly.hpp"
#include "iwasawa/series.hpp"

namespace iwasawa {

struct WeierstrassDivision {
    LambdaSeries quotient;   // x-precision = input b - deg P
    LambdaSeries remainder;  // polynomial of degree < deg P, x-precision deg P
};

struct WeierstrassFactorization {
    int mu = 0;
    DistinguishedPoly distinguished_part;
    LambdaSeries unit_part;
    int result_p_precision = 0;  // precision of the two parts (input a - mu)
    int result_x_precision = 0;
    // p^mu * distinguished_part * unit_part == input mod (p^{mu + result_p_precision},
    // X^{result_x_precision}).
};

namespace detail {

// series multiply-accumulate on raw residue vectors mod (p^a, X^b)
inline std::vector<BigInt> mul_trunc(const std::vector<BigInt>& x, const std::vector<BigInt>& y,
                                     const BigInt& m, int b) {
    std::vector<BigInt> r(static_cast<std::size_t>(b), BigInt(0));
    for (std::size_t i = 0; i < x.size() && i < static_cast<std::size_t>(b); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size() && i + j < static_cast<std::size_t>(b); ++j)
            r[i + j] += x[i] * y[j];
    }
    for (auto& v : r) v = mod_floor(v, m);
    return r;
}

// inverse of a unit-constant-term series mod (p, X^b), machine arithmetic
inline std::vector<std::uint64_t> invert_series_mod_p(const std::vector<std::uint64_t>& u,
                                                      std::uint64_t p, int b) {
    std::vector<std::uint64_t> w(static_cast<std::size_t>(b), 0);
    // invert u[0] mod p
    std::uint64_t inv0 = 1;
    {
        std::int64_t t0 = 0, t1 = 1;
        std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(u[0] % p);
        while (r1 != 0) {
            std::int64_t q = r0 / r1, tr = r0 - q * r1, tt = t0 - q * t1;
            r0 = r1;
            r1 = tr;
            t0 = t1;
            t1 = tt;
        }
        t0 %= static_cast<std::int64_t>(p);
        if (t0 < 0) t0 += static_cast<std::int64_t>(p);
        inv0 = static_cast<std::uint64_t>(t0);
    }
    w[0] = inv0;
    for (int k = 1; k < b; ++k) {
        // w_k = -inv0 * sum_{j=1..k} u_j w_{k-j}
        std::uint64_t acc = 0;
        for (int j = 1; j <= k; ++j) {
            std::uint64_t uj = (j < static_cast<int>(u.size())) ? u[j] % p : 0;
            acc = (acc + uj * w[k - j]) % p;
        }
        w[k] = (p - acc % p) % p * inv0 % p;
    }
    return w;
}

}  // namespace detail

/// Weierstrass division f = q*P + r with deg r < deg P, solved exactly in the
/// truncated ring (Z/p^a)[X]/X^b by the contraction q <- high_d(f - pB q),
/// where P = X^d + pB. Requires b >= d; at b == d the quotient carries no
/// determined coefficient and only the remainder is produced.
inline WeierstrassDivision weierstrass_divide(const LambdaSeries& f, const DistinguishedPoly& P) {
    if (f.prime() != P.p) throw PrimeMismatch("series and divisor have different primes");
    const int a = f.p_precision();
    const int b = f.x_precision();
    const int d = P.degree();
    if (b < d)
        throw InsufficientPrecision("x-precision below divisor degree: no quotient coefficient");
    const BigInt m = f.modulus();

    // low part of P as residues (the p-divisible tail pB)
    std::vector<BigInt> pb(static_cast<std::size_t>(d), BigInt(0));
    for (int i = 0; i < d; ++i) pb[static_cast<std::size_t>(i)] = mod_floor(P.poly.coeff(i), m);

    std::vector<BigInt> fv(static_cast<std::size_t>(b), BigInt(0));
    for (int i = 0; i < b; ++i) fv[static_cast<std::size_t>(i)] = f.coeff(i);

    std::vector<BigInt> q(static_cast<std::size_t>(b), BigInt(0));
    std::vector<BigInt> t = fv;
    for (int iter = 0; iter <= a; ++iter) {
        // q = high_d(t); t = f - pB*q
        for (int i = 0; i + d < b; ++i) q[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i + d)];
        for (int i = std::max(0, b - d); i < b; ++i) q[static_cast<std::size_t>(i)] = BigInt(0);
        std::vector<BigInt> bq = detail::mul_trunc(pb, q, m, b);
        for (int i = 0; i < b; ++i) t[static_cast<std::size_t>(i)] = mod_floor(fv[static_cast<std::size_t>(i)] - bq[static_cast<std::size_t>(i)], m);
    }
    std::vector<BigInt> rem(t.begin(), t.begin() + d);
    std::vector<BigInt> qc(q.begin(), q.begin() + std::max(0, b - d));
    return WeierstrassDivision{
        LambdaSeries(f.prime(), a, std::max(1, b - d), std::move(qc)),
        LambdaSeries(f.prime(), a, std::max(1, d), std::move(rem)),
    };
}

/// Weierstrass preparation f = p^mu * P * u with P distinguished and u a
/// unit, by digitwise Hensel lifting of the mod-p factorization.
inline WeierstrassFactorization weierstrass_prepare(const LambdaSeries& f) {
    const std::uint64_t p = f.prime();
    const int a = f.p_precision();
    const int b = f.x_precision();
    if (f.is_zero_within_precision())
        throw ZeroWithinPrecision("cannot prepare a series that vanishes within precision");
    const int mu = f.min_valuation();
    const int aa = a - mu;  // precision of the prepared parts

    // g = f / p^mu, reduced mod p^aa
    BigInt pmu = BigInt::pow(BigInt(p), static_cast<unsigned long long>(mu));
    BigInt maa = BigInt::pow(BigInt(p), static_cast<unsigned long long>(aa));
    std::vector<BigInt> g(static_cast<std::size_t>(b), BigInt(0));
    for (int i = 0; i < b; ++i) g[static_cast<std::size_t>(i)] = mod_floor(f.coeff(i) / pmu, maa);

    // break index: first unit coefficient of g
    int d = -1;
    for (int i = 0; i < b; ++i) {
        if (!mod_floor(g[static_cast<std::size_t>(i)], BigInt(p)).is_zero()) {
            d = i;
            break;
        }
    }
    if (d < 0)
        throw InsufficientXPrecision(
            "no unit coefficient before the X-truncation bound; distinguished degree unresolved");

    // initial factorization mod p:  g = u*P, P = X^d, u = shift_d(g)
    std::vector<BigInt> P(static_cast<std::size_t>(d) + 1, BigInt(0));
    P[static_cast<std::size_t>(d)] = BigInt(1);
    std::vector<BigInt> u(static_cast<std::size_t>(b), BigInt(0));
    for (int i = d; i < b; ++i) u[static_cast<std::size_t>(i - d)] = mod_floor(g[static_cast<std::size_t>(i)], BigInt(p));

    // mod-p inverse of the unit part, machine words
    std::vector<std::uint64_t> ubar(static_cast<std::size_t>(b), 0);
    for (int i = 0; i < b; ++i)
        ubar[static_cast<std::size_t>(i)] = mod_floor(u[static_cast<std::size_t>(i)], BigInt(p)).is_zero()
                                                ? 0
                                                : mod_floor(u[static_cast<std::size_t>(i)], BigInt(p)).to_u64();
    std::vector<std::uint64_t> ubar_inv = detail::invert_series_mod_p(ubar, p, b);

    BigInt pk(1);
    for (int k = 1; k < aa; ++k) {
        pk *= BigInt(p);
        BigInt pk1 = pk * BigInt(p);
        // E = (g - u*P)/p^k mod p
        std::vector<BigInt> up = detail::mul_trunc(u, P, maa, b);
        std::vector<std::uint64_t> E(static_cast<std::size_t>(b), 0);
        for (int i = 0; i < b; ++i) {
            BigInt diff = mod_floor(g[static_cast<std::size_t>(i)] - up[static_cast<std::size_t>(i)], pk1);
            E[static_cast<std::size_t>(i)] = mod_floor(diff / pk, BigInt(p)).to_u64();
        }
        // solve ubar*delta + eps*X^d = E (mod p), deg delta < d
        std::vector<std::uint64_t> ie(static_cast<std::size_t>(b), 0);
        for (int i = 0; i < b; ++i) {
            std::uint64_t acc = 0;
            for (int j = 0; j <= i; ++j) acc = (acc + ubar_inv[static_cast<std::size_t>(j)] * E[static_cast<std::size_t>(i - j)]) % p;
            ie[static_cast<std::size_t>(i)] = acc;
        }
        // delta = low_d(ubar_inv * E)
        for (int i = 0; i < d; ++i)
            P[static_cast<std::size_t>(i)] = mod_floor(P[static_cast<std::size_t>(i)] + pk * BigInt(ie[static_cast<std::size_t>(i)]), maa);
        // eps = shift_d(E - ubar*delta)
        for (int i = 0; i + d < b; ++i) {
            // eps_i = E_{i+d} - sum_j ubar_j * delta_{i+d-j}
            std::uint64_t acc = E[static_cast<std::size_t>(i + d)] % p;
            for (int j = 0; j <= i + d; ++j) {
                int dj = i + d - j;
                if (dj < d) {
                    std::uint64_t term = (ubar[static_cast<std::size_t>(j)] % p) * ie[static_cast<std::size_t>(dj)] % p;
                    acc = (acc + p - term) % p;
                }
            }
            u[static_cast<std::size_t>(i)] = mod_floor(u[static_cast<std::size_t>(i)] + pk * BigInt(acc), maa);
        }
    }

    IntPoly pp(std::move(P));
    return WeierstrassFactorization{
        mu,
        DistinguishedPoly(p, std::move(pp)),
        LambdaSeries(p, aa, b, std::move(u)),
        aa,
        b,
    };
}

/// Distinguished normalization of the iota-image of F:
///   F^iota = T(F) / F(-1),  T(F) = sum_j c_j (-X)^j (1+X)^{d-j}.
/// T(F) equals (1+X)^d * F((1+X)^{-1} - 1), i.e. iota(F) times a unit, and
/// T(T(F)) = F, so the normalization is involutive. Coefficients of the
/// result are canonical residues mod p^a.
inline DistinguishedPoly iota_normalize(const DistinguishedPoly& F, int a) {
    if (a < 1)
        throw InsufficientPrecision("iota_normalize cannot resolve coefficients at precision < 1");
    const int d = F.degree();
    std::vector<BigInt> t(static_cast<std::size_t>(d) + 1, BigInt(0));
    // (1+X)^{d-j} rows via one running binomial row, consumed from j = d down
    for (int j = 0; j <= d; ++j) {
        const BigInt& cj = F.poly.c[static_cast<std::size_t>(j)];
        if (cj.is_zero()) continue;
        BigInt sgn((j % 2) ? -1 : 1);
        BigInt binom(1);
        for (int k = 0; k <= d - j; ++k) {
            t[static_cast<std::size_t>(j + k)] += cj * sgn * binom;
            if (k < d - j) {
                binom *= BigInt(d - j - k);
                binom = BigInt::divmod(binom, BigInt(k + 1)).first;
            }
        }
    }
    BigInt lead = F.poly.eval(BigInt(-1));  // the unit T(F) ends with
    BigInt inv = unit_inverse_mod(lead, F.p, a);
    BigInt m = BigInt::pow(BigInt(F.p), static_cast<unsigned long long>(a));
    std::vector<BigInt> out(static_cast<std::size_t>(d) + 1, BigInt(0));
    for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = mod_floor(t[static_cast<std::size_t>(i)] * inv, m);
    out[static_cast<std::size_t>(d)] = BigInt(1);
    return DistinguishedPoly(F.p, IntPoly(std::move(out)));
}

/// Working precision that lets iota_normalize round-trip a polynomial whose
/// coefficients already lie in [0, p^a): enough digits to represent them,
/// plus headroom.
inline int iota_default_precision(const DistinguishedPoly& F) {
    BigInt mx(0);
    for (const auto& c : F.poly.c)
        if (c.abs() > mx) mx = c.abs();
    int a = 1;
    BigInt pw(F.p);
    while (pw <= mx) {
        pw *= BigInt(F.p);
        ++a;
    }
    return a + 4;
}

}  // namespace iwasawa
