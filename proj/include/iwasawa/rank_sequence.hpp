#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwasawa/errors.hpp"
#include "iwasawa/int_poly.hpp"
#include "iwasawa/weierstrass.hpp"

namespace iwasawa {

/// Mordell-Weil ranks r_n = rank E(L_n) up the cyclotomic tower. Ranks are
/// caller-supplied data; nothing here computes them.
struct RankSequence {
    std::uint64_t p = 3;
    std::vector<long long> ranks;

    RankSequence(std::uint64_t prime, std::vector<long long> r) : p(prime), ranks(std::move(r)) {
        require_odd_prime(p);
        if (ranks.empty()) throw InvalidArgument("rank sequence must be nonempty");
        for (long long x : ranks)
            if (x < 0) throw InvalidArgument("ranks must be non-negative");
    }
};

/// e_0 = r_0 and e_n = (r_n - r_{n-1}) / (p^{n-1}(p-1)); the divisibility is
/// what makes the sequence admissible.
inline std::vector<long long> exponent_sequence(const RankSequence& rs) {
    std::vector<long long> e;
    e.reserve(rs.ranks.size());
    e.push_back(rs.ranks[0]);
    long long layer = static_cast<long long>(rs.p) - 1;  // p^{n-1}(p-1)
    for (std::size_t n = 1; n < rs.ranks.size(); ++n) {
        long long diff = rs.ranks[n] - rs.ranks[n - 1];
        if (diff < 0)
            throw DecreasingRank("rank sequence decreases at layer " + std::to_string(n));
        if (diff % layer != 0)
            throw NonIntegralExponent("rank jump at layer " + std::to_string(n) +
                                      " is not divisible by p^{n-1}(p-1)");
        e.push_back(diff / layer);
        layer *= static_cast<long long>(rs.p);
    }
    return e;
}

/// The factored right-hand side prod_{e_n >= 1} Phi_n^{e_n - 1}. Factors with
/// e_n = 1 are recorded with exponent 0 so that "the rank jumped exactly
/// once" stays distinguishable from "no jump at all".
struct GrRightSide {
    std::uint64_t p = 3;
    std::vector<std::pair<unsigned, long long>> factors;  // (n, e_n - 1), n ascending

    bool trivial() const noexcept {
        for (const auto& [n, e] : factors)
            if (e > 0) return false;
        return true;
    }

    long long expanded_degree() const {
        long long d = 0;
        for (const auto& [n, e] : factors)
            d += e * static_cast<long long>(phi_degree(n, p));
        return d;
    }

    std::string to_string() const {
        if (factors.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += " ";
            out += "Phi" + std::to_string(factors[i].first) + "^" +
                   std::to_string(factors[i].second);
        }
        return out;
    }
};

inline GrRightSide gr_rhs(const RankSequence& rs) {
    std::vector<long long> e = exponent_sequence(rs);
    GrRightSide r;
    r.p = rs.p;
    for (std::size_t n = 0; n < e.size(); ++n)
        if (e[n] >= 1) r.factors.emplace_back(static_cast<unsigned>(n), e[n] - 1);
    return r;
}

/// Witness for the iota-invariance of the right-hand side: checks, factor by
/// factor, that iota_normalize fixes Phi_n. Always true; the point is that it
/// is computed rather than assumed.
inline bool verify_iota_invariance(const GrRightSide& rhs) {
    for (const auto& [n, e] : rhs.factors) {
        DistinguishedPoly f = cyclotomic_phi(n, rhs.p);
        int a = iota_default_precision(f);
        if (iota_normalize(f, a) != f) return false;
    }
    return true;
}

}  // namespace iwasawa
