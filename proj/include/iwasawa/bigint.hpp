#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "iwasawa/errors.hpp"

namespace iwasawa {

/// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
///
/// Scope is deliberately small: the library only needs exact polynomial
/// coefficients (binomial-sized, a few dozen digits) and residues mod p^a.
/// Schoolbook multiplication and Knuth algorithm D division are plenty here.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT(google-explicit-constructor): integer literals everywhere
        if (v < 0) {
            // avoid UB on LLONG_MIN
            unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ULL;
            assign_u64(m);
            negative_ = true;
        } else {
            assign_u64(static_cast<unsigned long long>(v));
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}   // NOLINT
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}  // NOLINT
    BigInt(unsigned long long v) { assign_u64(v); }        // NOLINT
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}  // NOLINT
    BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}       // NOLINT

    /// Parse a decimal string with optional leading '-'.
    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw ParseError("empty integer literal");
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = (s[0] == '-');
            i = 1;
        }
        if (i == s.size()) throw ParseError("integer literal has no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw ParseError("bad digit in integer literal: " + s);
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.negative_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_negative() const noexcept { return negative_; }
    bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1u); }
    int sign() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt abs() const {
        BigInt r = *this;
        r.negative_ = false;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
            r.trim();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.negative_ = b.negative_;
        }
        r.trim();
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_ = mul_mag(a.limbs_, b.limbs_);
        r.negative_ = (a.negative_ != b.negative_);
        r.trim();
        return r;
    }

    /// Truncating division (C semantics): quotient toward zero, remainder with
    /// the dividend's sign.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw InvalidArgument("BigInt division by zero");
        auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
        BigInt q, r;
        q.limbs_ = std::move(qm);
        r.limbs_ = std::move(rm);
        q.negative_ = (a.negative_ != b.negative_);
        r.negative_ = a.negative_;
        q.trim();
        r.trim();
        return {q, r};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
    BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

    static BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt r = 1, b = base;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    bool fits_u64() const noexcept { return !negative_ && limbs_.size() <= 2; }

    std::uint64_t to_u64() const {
        if (!fits_u64()) throw InvalidArgument("BigInt does not fit in uint64");
        std::uint64_t v = 0;
        if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

    long long to_i64() const {
        BigInt a = abs();
        if (a.limbs_.size() > 2) throw InvalidArgument("BigInt does not fit in int64");
        std::uint64_t m = a.is_zero() ? 0 : a.to_u64();
        if (!negative_) {
            if (m > 0x7fffffffffffffffULL) throw InvalidArgument("BigInt does not fit in int64");
            return static_cast<long long>(m);
        }
        if (m > 0x8000000000000000ULL) throw InvalidArgument("BigInt does not fit in int64");
        return m == 0x8000000000000000ULL ? std::numeric_limits<long long>::min()
                                          : -static_cast<long long>(m);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
        std::vector<std::uint32_t> work = limbs_;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            chunks.push_back(static_cast<std::uint32_t>(rem));
            while (!work.empty() && work.back() == 0) work.pop_back();
        }
        std::string out = negative_ ? "-" : "";
        out += std::to_string(chunks.back());
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

    /// Divisibility by a small positive integer.
    bool divisible_by(std::uint32_t d) const {
        if (d == 0) throw InvalidArgument("divisible_by zero");
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 32) | limbs_[i]) % d;
        return rem == 0;
    }

private:
    std::vector<std::uint32_t> limbs_;  // little-endian, no high zero limbs
    bool negative_ = false;             // false for zero

    void assign_u64(unsigned long long v) {
        limbs_.clear();
        negative_ = false;
        while (v) {
            limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffULL));
            v >>= 32;
        }
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    void add_small(std::uint32_t d) {
        std::uint64_t carry = d;
        for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
            std::uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? -c : c;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& lo = a.size() < b.size() ? a : b;
        const auto& hi = a.size() < b.size() ? b : a;
        std::vector<std::uint32_t> r(hi.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[hi.size()] = static_cast<std::uint32_t>(carry);
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            r[i] = static_cast<std::uint32_t>(cur);
        }
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(r[i + j]) + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = static_cast<std::uint64_t>(r[k]) + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        return r;
    }

    // Knuth TAOCP vol.2 algorithm D on magnitudes.
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> divmod_mag(
        const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v) {
        if (cmp_mag(u, v) < 0) return {{}, u};
        if (v.size() == 1) {
            std::vector<std::uint32_t> q(u.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = u.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | u[i];
                q[i] = static_cast<std::uint32_t>(cur / v[0]);
                rem = cur % v[0];
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            std::vector<std::uint32_t> r;
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return {q, r};
        }

        const int s = count_leading_zeros(v.back());
        std::vector<std::uint32_t> vn = shl_bits(v, s);
        std::vector<std::uint32_t> un = shl_bits(u, s);
        un.push_back(0);  // guard limb
        const std::size_t n = vn.size();
        const std::size_t m = un.size() - n - 1;
        std::vector<std::uint32_t> q(m + 1, 0);
        const std::uint64_t B = 1ULL << 32;

        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            std::uint64_t qhat = num / vn[n - 1];
            std::uint64_t rhat = num % vn[n - 1];
            while (qhat >= B ||
                   qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= B) break;
            }
            // multiply and subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * vn[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
                borrow = t < 0;
                if (t < 0) t += static_cast<std::int64_t>(B);
                un[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(un[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            un[j + n] = static_cast<std::uint32_t>(t);
            if (t < 0) {
                // qhat was one too large: add the divisor back (un wraps mod 2^32)
                --qhat;
                std::uint64_t carry2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur =
                        static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry2;
                    un[i + j] = static_cast<std::uint32_t>(cur);
                    carry2 = cur >> 32;
                }
                un[j + n] = static_cast<std::uint32_t>(un[j + n] + carry2);
            }
            q[j] = static_cast<std::uint32_t>(qhat);
        }

        while (!q.empty() && q.back() == 0) q.pop_back();
        un.resize(n);
        std::vector<std::uint32_t> r = shr_bits(un, s);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return {q, r};
    }

    static int count_leading_zeros(std::uint32_t x) {
        int n = 0;
        while (!(x & 0x80000000u)) {
            x <<= 1;
            ++n;
        }
        return n;
    }

    static std::vector<std::uint32_t> shl_bits(const std::vector<std::uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<std::uint32_t> r(a.size() + 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = a[i] >> (32 - s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> shr_bits(const std::vector<std::uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<std::uint32_t> r(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] >> s;
            if (i + 1 < a.size()) r[i] |= a[i + 1] << (32 - s);
        }
        return r;
    }
};

/// Canonical representative of x modulo m in [0, m); m must be positive.
inline BigInt mod_floor(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r.is_negative()) r += m;
    return r;
}

/// p-adic valuation of x, capped at `cap` (and for x == 0 returns `cap`).
inline int valuation_capped(const BigInt& x, std::uint64_t p, int cap) {
    if (x.is_zero()) return cap;
    BigInt v = x.abs();
    BigInt bp(p);
    int n = 0;
    while (n < cap) {
        auto [q, r] = BigInt::divmod(v, bp);
        if (!r.is_zero()) break;
        v = q;
        ++n;
    }
    return n;
}

}  // namespace iwasawa
