#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "iwasawa/errors.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa {

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            fs.emplace_back(d, e);
        }
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

inline bool is_squarefree_u64(std::uint64_t n) {
    for (const auto& [q, e] : factorize_u64(n))
        if (e > 1) return false;
    return true;
}

/// Euler totient by trial factorization.
inline std::uint64_t euler_phi(std::uint64_t m) {
    if (m < 1) throw InvalidArgument("euler_phi needs m >= 1");
    std::uint64_t r = m;
    for (const auto& [q, e] : factorize_u64(m)) r = r / q * (q - 1);
    return r;
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, bb = b % m;
    while (e) {
        if (e & 1) r = r * bb % m;
        bb = bb * bb % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

/// Order of ell in (Z/pZ)^x: start from p-1 and strip prime factors while the
/// power stays 1. The result divides p-1.
inline std::uint64_t multiplicative_order(std::uint64_t ell, std::uint64_t p) {
    require_odd_prime(p);
    if (ell % p == 0) throw NotCoprime("multiplicative order needs gcd(ell, p) = 1");
    std::uint64_t ord = p - 1;
    for (const auto& [q, e] : factorize_u64(p - 1)) {
        for (unsigned i = 0; i < e && ord % q == 0; ++i) {
            if (powmod_u64(ell, ord / q, p) == 1)
                ord /= q;
            else
                break;
        }
    }
    return ord;
}

/// Newform data as consumed by the hypothesis checker: square-free level N,
/// weight k >= 2, nebentypus conductor M | N. Fourier coefficients never
/// enter the conditions, so records carry none.
struct NewformRecord {
    std::string label;
    std::uint64_t level = 1;                 // N
    int weight = 2;                          // k
    std::uint64_t nebentypus_conductor = 1;  // M

    NewformRecord(std::string lbl, std::uint64_t n, int k, std::uint64_t m)
        : label(std::move(lbl)), level(n), weight(k), nebentypus_conductor(m) {
        if (level < 1) throw InvalidArgument("level must be >= 1");
        if (weight < 2) throw InvalidArgument("weight must be >= 2");
        if (nebentypus_conductor < 1 || level % nebentypus_conductor != 0)
            throw InvalidArgument("nebentypus conductor must divide the level");
        if (!is_squarefree_u64(level)) throw NotSquareFree("level must be square-free");
    }
};

struct TwistQuery {
    std::uint64_t p = 3;
    int i = 0;
};

enum class ReasonCode {
    EllEq1ModP,
    OrderDivides1MinusKPlusI,
    OrderDivides1MinusI,
    GcdWithPhiM,
    OrderDividesK,
    OrderDividesKMinus2,
};

inline const char* to_string(ReasonCode c) {
    switch (c) {
        case ReasonCode::EllEq1ModP: return "ELL_EQ_1_MOD_P";
        case ReasonCode::OrderDivides1MinusKPlusI: return "ORDER_DIVIDES_1_MINUS_K_PLUS_I";
        case ReasonCode::OrderDivides1MinusI: return "ORDER_DIVIDES_1_MINUS_I";
        case ReasonCode::GcdWithPhiM: return "GCD_WITH_PHI_M";
        case ReasonCode::OrderDividesK: return "ORDER_DIVIDES_K";
        case ReasonCode::OrderDividesKMinus2: return "ORDER_DIVIDES_K_MINUS_2";
    }
    return "?";
}

/// Divisibility with the zero convention m | 0 = true: a twist that lands on
/// the trivial character power must fail the nontriviality conditions.
inline bool order_divides(std::uint64_t m, long long t) {
    long long a = t < 0 ? -t : t;
    return a % static_cast<long long>(m) == 0;
}

enum class PrimeBranch { DividesM, DividesNOverM };

struct PrimeDiagnostic {
    std::uint64_t ell = 0;
    std::uint64_t order = 0;  // m_ell
    PrimeBranch branch = PrimeBranch::DividesM;
    std::vector<ReasonCode> failures;  // every failing condition, not just the first

    bool pass() const noexcept { return failures.empty(); }
};

enum class Verdict { Pass, Fail, Inadmissible };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inadmissible: return "inadmissible";
    }
    return "?";
}

struct HypothesisReport {
    std::string label;
    std::uint64_t p = 3;
    int i = 0;
    Verdict verdict = Verdict::Fail;
    std::vector<PrimeDiagnostic> per_prime;
};

/// The per-prime conditions on ell | N:
///  (i)   ell != 1 mod p;
///  (ii)  if ell | M:   m_ell divides neither (1-k+i) nor (1-i);
///  (iii) if ell | N/M: gcd(m_ell, phi(M)) = 1 and m_ell divides neither k
///        nor (k-2).
inline PrimeDiagnostic check_prime(std::uint64_t ell, const NewformRecord& rec,
                                   const TwistQuery& q) {
    if (rec.level % ell != 0) throw InvalidArgument("ell must divide the level");
    if (ell == q.p) throw InadmissibleQuery("ell = p cannot happen when p does not divide N");
    PrimeDiagnostic d;
    d.ell = ell;
    d.order = multiplicative_order(ell, q.p);
    if (ell % q.p == 1) d.failures.push_back(ReasonCode::EllEq1ModP);
    const long long k = rec.weight;
    const long long i = q.i;
    if (rec.nebentypus_conductor % ell == 0) {
        d.branch = PrimeBranch::DividesM;
        if (order_divides(d.order, 1 - k + i))
            d.failures.push_back(ReasonCode::OrderDivides1MinusKPlusI);
        if (order_divides(d.order, 1 - i)) d.failures.push_back(ReasonCode::OrderDivides1MinusI);
    } else {
        d.branch = PrimeBranch::DividesNOverM;
        if (std::gcd(d.order, euler_phi(rec.nebentypus_conductor)) != 1)
            d.failures.push_back(ReasonCode::GcdWithPhiM);
        if (order_divides(d.order, k)) d.failures.push_back(ReasonCode::OrderDividesK);
        if (order_divides(d.order, k - 2)) d.failures.push_back(ReasonCode::OrderDividesKMinus2);
    }
    return d;
}

/// Full decision for one (p, i): pass iff every prime dividing N passes.
inline HypothesisReport check_hcyc(const NewformRecord& rec, const TwistQuery& q) {
    if (q.p == 2 || !is_prime_u64(q.p)) throw InadmissibleQuery("p must be an odd prime");
    if (rec.level % q.p == 0) throw InadmissibleQuery("p must not divide the level");
    if (q.i < 0 || q.i > rec.weight) throw InadmissibleQuery("twist i must satisfy 0 <= i <= k");
    HypothesisReport r;
    r.label = rec.label;
    r.p = q.p;
    r.i = q.i;
    r.verdict = Verdict::Pass;
    for (const auto& [ell, e] : factorize_u64(rec.level)) {
        PrimeDiagnostic d = check_prime(ell, rec, q);
        if (!d.pass()) r.verdict = Verdict::Fail;
        r.per_prime.push_back(std::move(d));
    }
    return r;
}

/// Batch driver: odd primes p <= p_max ascending, each requested twist i
/// ascending; p | N yields an explicit inadmissible marker instead of a
/// verdict. Deterministic ordering throughout.
inline std::vector<HypothesisReport> scan(const NewformRecord& rec, std::uint64_t p_max,
                                          const std::vector<int>& i_values) {
    if (p_max < 3) throw InvalidArgument("scan needs p_max >= 3");
    std::vector<int> is = i_values;
    if (is.empty())
        for (int i = 0; i <= rec.weight; ++i) is.push_back(i);
    for (int i : is)
        if (i < 0 || i > rec.weight)
            throw InadmissibleQuery("twist i must satisfy 0 <= i <= k");
    std::vector<HypothesisReport> out;
    for (std::uint64_t p = 3; p <= p_max; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (rec.level % p == 0) {
            for (int i : is) {
                HypothesisReport r;
                r.label = rec.label;
                r.p = p;
                r.i = i;
                r.verdict = Verdict::Inadmissible;
                out.push_back(std::move(r));
            }
            continue;
        }
        for (int i : is) out.push_back(check_hcyc(rec, TwistQuery{p, i}));
    }
    return out;
}

}  // namespace iwasawa
