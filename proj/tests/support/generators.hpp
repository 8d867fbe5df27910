#pragma once

#include <random>
#include <vector>

#include "iwasawa/elementary_module.hpp"

namespace testgen {

using iwasawa::DistinguishedPoly;
using iwasawa::ElementaryModule;
using iwasawa::TorsionPart;

/// Small pool of distinguished polynomials over p = 3, all irreducible
/// (linear or Eisenstein), suitable for random structure data.
inline const std::vector<DistinguishedPoly>& poly_pool_p3() {
    static const std::vector<DistinguishedPoly> pool = {
        DistinguishedPoly::from_ints(3, {0, 1}),           // X
        DistinguishedPoly::from_ints(3, {3, 1}),           // X + 3
        DistinguishedPoly::from_ints(3, {6, 1}),           // X + 6
        DistinguishedPoly::from_ints(3, {3, 3, 1}),        // Phi_1
        DistinguishedPoly::from_ints(3, {3, 0, 1}),        // X^2 + 3
        DistinguishedPoly::from_ints(3, {3, 6, 1}),        // X^2 + 6X + 3
        DistinguishedPoly::from_ints(3, {3, 3, 3, 1}),     // cubic Eisenstein
        DistinguishedPoly::from_ints(3, {3, 0, 0, 1}),     // X^3 + 3
    };
    return pool;
}

inline ElementaryModule random_torsion_module(std::mt19937_64& rng, int max_parts = 3,
                                              int max_mu = 2, int max_exp = 3) {
    const auto& pool = poly_pool_p3();
    std::vector<int> mu;
    int nmu = static_cast<int>(rng() % static_cast<unsigned>(max_mu + 1));
    for (int i = 0; i < nmu; ++i) mu.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(max_exp)));
    std::vector<TorsionPart> parts;
    int np = static_cast<int>(rng() % static_cast<unsigned>(max_parts + 1));
    for (int i = 0; i < np; ++i)
        parts.emplace_back(pool[rng() % pool.size()],
                           1 + static_cast<int>(rng() % static_cast<unsigned>(max_exp)));
    return ElementaryModule(3, 1, 0, std::move(mu), std::move(parts));
}

/// A partner for `u` that agrees or disagrees with it in controlled ways, so
/// equivalence tests see both verdicts.
inline ElementaryModule random_partner(std::mt19937_64& rng, const ElementaryModule& u) {
    switch (rng() % 4) {
        case 0:  // identical
            return u;
        case 1: {  // same pi-part, fresh lambda-part
            ElementaryModule v = random_torsion_module(rng);
            return ElementaryModule(3, 1, 0, u.mu_exponents, v.torsion_parts);
        }
        case 2: {  // same lambda-part, fresh pi-part
            ElementaryModule v = random_torsion_module(rng);
            return ElementaryModule(3, 1, 0, v.mu_exponents, u.torsion_parts);
        }
        default:
            return random_torsion_module(rng);
    }
}

}  // namespace testgen
