#pragma once

#include <cstdint>
#include <vector>

#include "iwasawa/bigint.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/int_poly.hpp"

namespace iwasawa {

/// Dense matrix over Z/p^e on machine words. The moduli in play are tiny
/// (p^e < 2^31), so entries and products stay inside uint64.
struct ZModMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint64_t mod = 1;  // p^e
    std::vector<std::uint64_t> a;

    ZModMatrix() = default;
    ZModMatrix(std::size_t r, std::size_t c, std::uint64_t m)
        : rows(r), cols(c), mod(m), a(r * c, 0) {
        if (m < 2 || m > (1ull << 31))
            throw InvalidArgument("matrix modulus out of supported range");
    }

    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static ZModMatrix identity(std::size_t n, std::uint64_t m) {
        ZModMatrix r(n, n, m);
        for (std::size_t i = 0; i < n; ++i) r.at(i, i) = 1;
        return r;
    }
};

inline std::uint64_t pow_u64_checked(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= base;
        if (r > (1ull << 31)) throw InvalidArgument("p^e exceeds matrix range");
    }
    return r;
}

inline std::uint64_t inv_mod_u64(std::uint64_t u, std::uint64_t m) {
    std::int64_t t0 = 0, t1 = 1;
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(u % m);
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tr = r0 - q * r1, tt = t0 - q * t1;
        r0 = r1;
        r1 = tr;
        t0 = t1;
        t1 = tt;
    }
    if (r0 != 1) throw NotUnit("inverse of a non-unit mod p^e");
    t0 %= static_cast<std::int64_t>(m);
    if (t0 < 0) t0 += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t0);
}

inline int val_u64(std::uint64_t x, std::uint64_t p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

/// Diagonal valuations of the Smith normal form over the local ring Z/p^e:
/// repeatedly pivot on a minimum-valuation entry (which divides everything
/// left) and clear its row and column. Entries that vanish mod p^e report
/// valuation e. Returns min(rows, cols) values.
inline std::vector<int> smith_valuations(ZModMatrix m, std::uint64_t p, int e) {
    const std::size_t n = std::min(m.rows, m.cols);
    std::vector<int> vals;
    vals.reserve(n);
    // a diagonal matrix is already reduced
    bool diagonal = true;
    for (std::size_t i = 0; i < m.rows && diagonal; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (i != j && m.at(i, j) != 0) {
                diagonal = false;
                break;
            }
    if (diagonal) {
        for (std::size_t i = 0; i < n; ++i) vals.push_back(val_u64(m.at(i, i), p, e));
        return vals;
    }
    std::size_t top = 0;
    while (top < n) {
        // locate minimal-valuation pivot in the trailing block
        int best_v = e;
        std::size_t bi = top, bj = top;
        for (std::size_t i = top; i < m.rows && best_v > 0; ++i) {
            for (std::size_t j = top; j < m.cols; ++j) {
                int v = val_u64(m.at(i, j), p, e);
                if (v < best_v) {
                    best_v = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        }
        if (best_v >= e) break;  // remaining block is zero mod p^e
        // swap pivot into place
        if (bi != top)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(top, j), m.at(bi, j));
        if (bj != top)
            for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, top), m.at(i, bj));
        const std::uint64_t piv = m.at(top, top);
        std::uint64_t pv = 1;
        for (int k = 0; k < best_v; ++k) pv *= p;
        const std::uint64_t cofactor_mod = m.mod / pv;  // p^{e-v}
        const std::uint64_t unit = (piv / pv) % cofactor_mod;
        const std::uint64_t unit_inv = inv_mod_u64(unit, cofactor_mod);
        // clear the column below and the row to the right
        for (std::size_t i = top + 1; i < m.rows; ++i) {
            std::uint64_t x = m.at(i, top);
            if (x == 0) continue;
            std::uint64_t f = (x / pv) % cofactor_mod * unit_inv % cofactor_mod;
            if (f == 0) continue;
            for (std::size_t j = top; j < m.cols; ++j) {
                std::uint64_t sub = f * m.at(top, j) % m.mod;
                m.at(i, j) = (m.at(i, j) + m.mod - sub) % m.mod;
            }
        }
        for (std::size_t j = top + 1; j < m.cols; ++j) {
            std::uint64_t x = m.at(top, j);
            if (x == 0) continue;
            std::uint64_t f = (x / pv) % cofactor_mod * unit_inv % cofactor_mod;
            if (f == 0) continue;
            for (std::size_t i = top; i < m.rows; ++i) {
                std::uint64_t sub = f * m.at(i, top) % m.mod;
                m.at(i, j) = (m.at(i, j) + m.mod - sub) % m.mod;
            }
        }
        vals.push_back(best_v);
        ++top;
    }
    while (vals.size() < n) vals.push_back(e);
    return vals;
}

/// log_p |coker(A : (Z/p^e)^cols -> (Z/p^e)^rows)| = sum min(v_i, e) over the
/// SNF diagonal plus e per missing pivot row.
inline long long cokernel_exponent(const ZModMatrix& m, std::uint64_t p, int e) {
    std::vector<int> vals = smith_valuations(m, p, e);
    long long s = 0;
    for (int v : vals) s += std::min(v, e);
    if (m.rows > m.cols) s += static_cast<long long>(e) * static_cast<long long>(m.rows - m.cols);
    return s;
}

/// log_p |ker(A : (Z/p^e)^cols -> (Z/p^e)^rows)|.
inline long long kernel_exponent(const ZModMatrix& m, std::uint64_t p, int e) {
    std::vector<int> vals = smith_valuations(m, p, e);
    long long s = 0;
    for (int v : vals) s += std::min(v, e);
    if (m.cols > m.rows) s += static_cast<long long>(e) * static_cast<long long>(m.cols - m.rows);
    return s;
}

/// Inverse of an invertible matrix over Z/p^e by Gauss-Jordan with unit
/// pivots (a matrix over a local ring is invertible iff it is mod p).
inline ZModMatrix inverse(const ZModMatrix& src, std::uint64_t p) {
    if (src.rows != src.cols) throw InvalidArgument("inverse of a non-square matrix");
    const std::size_t n = src.rows;
    const std::uint64_t mod = src.mod;
    ZModMatrix m = src;
    ZModMatrix r = ZModMatrix::identity(n, mod);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i) {
            if (m.at(i, c) % p != 0) {
                piv = i;
                break;
            }
        }
        if (piv == n) throw NotUnit("matrix is not invertible mod p^e");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(c, j), m.at(piv, j));
                std::swap(r.at(c, j), r.at(piv, j));
            }
        std::uint64_t inv = inv_mod_u64(m.at(c, c), mod);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(c, j) = m.at(c, j) * inv % mod;
            r.at(c, j) = r.at(c, j) * inv % mod;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            std::uint64_t f = m.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) + mod - f * m.at(c, j) % mod) % mod;
                r.at(i, j) = (r.at(i, j) + mod - f * r.at(c, j) % mod) % mod;
            }
        }
    }
    return r;
}

inline ZModMatrix transpose(const ZModMatrix& m) {
    ZModMatrix r(m.cols, m.rows, m.mod);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

inline ZModMatrix kronecker(const ZModMatrix& x, const ZModMatrix& y) {
    if (x.mod != y.mod) throw InvalidArgument("kronecker factors over different moduli");
    ZModMatrix r(x.rows * y.rows, x.cols * y.cols, x.mod);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            std::uint64_t s = x.at(i, j);
            if (s == 0) continue;
            for (std::size_t k = 0; k < y.rows; ++k)
                for (std::size_t l = 0; l < y.cols; ++l)
                    r.at(i * y.rows + k, j * y.cols + l) = s * y.at(k, l) % x.mod;
        }
    return r;
}

inline ZModMatrix subtract_identity(ZModMatrix m) {
    if (m.rows != m.cols) throw InvalidArgument("subtract_identity on non-square matrix");
    for (std::size_t i = 0; i < m.rows; ++i)
        m.at(i, i) = (m.at(i, i) + m.mod - 1) % m.mod;
    return m;
}

/// Reduction of an exact polynomial to machine residues mod p^e.
inline std::vector<std::uint64_t> poly_residues(const IntPoly& f, std::uint64_t mod) {
    std::vector<std::uint64_t> r(f.c.size(), 0);
    BigInt m(mod);
    for (std::size_t i = 0; i < f.c.size(); ++i) r[i] = mod_floor(f.c[i], m).to_u64();
    return r;
}

/// Matrix of multiplication by `g` on (Z/p^e)[X]/(R), R monic given by exact
/// integer coefficients. Columns are g * X^j reduced mod (R, p^e).
inline ZModMatrix multiplication_matrix(const IntPoly& g, const IntPoly& R, std::uint64_t p,
                                        int e) {
    const std::uint64_t mod = pow_u64_checked(p, static_cast<unsigned>(e));
    const int d = R.degree();
    if (d < 1) throw InvalidArgument("multiplication matrix needs deg R >= 1");
    if (d > 4096) throw InvalidArgument("multiplication matrix rank exceeds 4096");
    std::vector<std::uint64_t> rr = poly_residues(R, mod);
    // reduce g mod (R, p^e)
    std::vector<std::uint64_t> gr = poly_residues(g, mod);
    for (std::size_t i = gr.size(); i-- > static_cast<std::size_t>(d);) {
        std::uint64_t t = gr[i];
        if (t == 0) continue;
        gr[i] = 0;
        for (int j = 0; j < d; ++j)
            gr[i - d + j] = (gr[i - d + j] + mod - t * rr[j] % mod) % mod;
    }
    gr.resize(d, 0);

    ZModMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d), mod);
    std::vector<std::uint64_t> col = gr;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col[i];
        if (j + 1 < d) {
            // col <- X * col mod (R, p^e)
            std::uint64_t top = col[static_cast<std::size_t>(d - 1)];
            for (int i = d - 1; i > 0; --i) col[static_cast<std::size_t>(i)] = col[static_cast<std::size_t>(i - 1)];
            col[0] = 0;
            if (top) {
                for (int i = 0; i < d; ++i)
                    col[static_cast<std::size_t>(i)] = (col[static_cast<std::size_t>(i)] + mod - top * rr[static_cast<std::size_t>(i)] % mod) % mod;
            }
        }
    }
    return m;
}

}  // namespace iwasawa
