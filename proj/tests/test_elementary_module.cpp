#include "doctest.h"

#include <random>

#include "iwasawa/elementary_module.hpp"
#include "support/generators.hpp"

using iwasawa::BigInt;
using iwasawa::DistinguishedPoly;
using iwasawa::ElementaryModule;
using iwasawa::TorsionPart;

namespace {

ElementaryModule make(std::uint64_t p, std::vector<int> mu,
                      std::vector<std::pair<std::vector<long long>, int>> parts, int free_rank = 0) {
    std::vector<TorsionPart> ps;
    for (auto& [c, b] : parts) ps.emplace_back(DistinguishedPoly::from_ints(p, c), b);
    return ElementaryModule(p, 1, free_rank, std::move(mu), std::move(ps));
}

}  // namespace

TEST_CASE("mu and lambda invariants") {
    CHECK(mu_invariant(make(3, {}, {})) == 0);
    CHECK(mu_invariant(make(3, {1, 2}, {})) == 3);
    CHECK(mu_invariant(make(3, {}, {{{3, 3, 1}, 1}})) == 0);

    CHECK(lambda_invariant(make(3, {}, {{{0, 1}, 2}})) == 2);     // Lambda/X^2
    CHECK(lambda_invariant(make(3, {}, {{{3, 3, 1}, 1}})) == 2);  // Lambda/Phi_1
    CHECK(lambda_invariant(make(3, {1}, {{{0, 1}, 1}})) == 1);    // Lambda/3 + Lambda/X
}

TEST_CASE("mu and lambda additive over direct sums") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        auto a = testgen::random_torsion_module(rng);
        auto b = testgen::random_torsion_module(rng);
        auto s = direct_sum(a, b);
        CHECK(mu_invariant(s) == mu_invariant(a) + mu_invariant(b));
        CHECK(lambda_invariant(s) == lambda_invariant(a) + lambda_invariant(b));
    }
}

TEST_CASE("f_part picks exactly the matching blocks") {
    auto x = DistinguishedPoly::from_ints(3, {0, 1});
    auto m1 = make(3, {1}, {{{0, 1}, 2}});  // Lambda/X^2 + Lambda/3
    auto fp = f_part(m1, x);
    CHECK(fp == make(3, {}, {{{0, 1}, 2}}));

    auto m2 = make(3, {}, {{{3, 3, 1}, 1}});  // Lambda/Phi_1
    CHECK(f_part(m2, x).is_zero());

    auto m3 = make(3, {}, {{{0, 1}, 1}, {{0, 1}, 3}});
    auto fp3 = f_part(m3, x);
    CHECK(fp3.torsion_parts.size() == 2);
    CHECK(fp3.torsion_parts[0].beta == 3);  // beta descending in canonical form
    CHECK(fp3.torsion_parts[1].beta == 1);
}

TEST_CASE("pi_part keeps only the p-power blocks") {
    CHECK(pi_part(make(3, {2}, {{{0, 1}, 1}})) == make(3, {2}, {}));
    CHECK(pi_part(make(3, {}, {{{3, 3, 1}, 1}})).is_zero());
    CHECK(pi_part(make(3, {1, 1}, {})) == make(3, {1, 1}, {}));
}

TEST_CASE("f_part and pi_part are idempotent") {
    std::mt19937_64 rng(18);
    const auto& pool = testgen::poly_pool_p3();
    for (int t = 0; t < 60; ++t) {
        auto m = testgen::random_torsion_module(rng);
        const auto& f = pool[rng() % pool.size()];
        CHECK(f_part(f_part(m, f), f) == f_part(m, f));
        CHECK(pi_part(pi_part(m)) == pi_part(m));
    }
}

TEST_CASE("f_part over distinct F plus pi_part embeds in the module") {
    std::mt19937_64 rng(21);
    const auto& pool = testgen::poly_pool_p3();
    for (int t = 0; t < 60; ++t) {
        auto m = testgen::random_torsion_module(rng);
        const auto& f = pool[rng() % pool.size()];
        const auto& g = pool[rng() % pool.size()];
        if (f == g) continue;
        auto recomposed = direct_sum(direct_sum(f_part(m, f), f_part(m, g)), pi_part(m));
        // multiset containment in m: every block of the recomposition occurs
        // at least as often in m
        for (const auto& part : recomposed.torsion_parts) {
            int in_r = 0, in_m = 0;
            for (const auto& q : recomposed.torsion_parts)
                if (q.poly == part.poly && q.beta == part.beta) ++in_r;
            for (const auto& q : m.torsion_parts)
                if (q.poly == part.poly && q.beta == part.beta) ++in_m;
            CHECK(in_r <= in_m);
        }
        CHECK(recomposed.mu_exponents == m.mu_exponents);
    }
}

TEST_CASE("char_ideal reads off the decomposition") {
    auto c = char_ideal(make(3, {1}, {{{0, 1}, 2}}));
    CHECK(c.mu_total == 1);
    REQUIRE(c.distinguished_factors.size() == 1);
    CHECK(c.distinguished_factors[0].second == 2);

    auto c2 = char_ideal(make(3, {}, {{{0, 1}, 1}, {{0, 1}, 1}}));
    CHECK(c2.mu_total == 0);
    REQUIRE(c2.distinguished_factors.size() == 1);
    CHECK(c2.distinguished_factors[0].second == 2);  // aggregated

    CHECK_THROWS_AS((void)char_ideal(make(3, {}, {{{0, 1}, 1}}, 1)), iwasawa::NotTorsion);
}

TEST_CASE("char_ideal multiplicative over direct sums") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 60; ++t) {
        auto a = testgen::random_torsion_module(rng);
        auto b = testgen::random_torsion_module(rng);
        auto cs = char_ideal(direct_sum(a, b));
        auto ca = char_ideal(a);
        auto cb = char_ideal(b);
        CHECK(cs.mu_total == ca.mu_total + cb.mu_total);
        for (const auto& [f, e] : cs.distinguished_factors) {
            int ea = 0, eb = 0;
            for (const auto& [g, x] : ca.distinguished_factors)
                if (g == f) ea = x;
            for (const auto& [g, x] : cb.distinguished_factors)
                if (g == f) eb = x;
            CHECK(e == ea + eb);
        }
    }
}

TEST_CASE("iota_twist fixes X, Phi, and p-power blocks") {
    CHECK(iota_twist(make(3, {}, {{{0, 1}, 1}})) == make(3, {}, {{{0, 1}, 1}}));
    CHECK(iota_twist(make(3, {}, {{{3, 3, 1}, 2}})) == make(3, {}, {{{3, 3, 1}, 2}}));
    CHECK(iota_twist(make(3, {1}, {})) == make(3, {1}, {}));
}

TEST_CASE("iota_twist is an involution at shared precision") {
    std::mt19937_64 rng(20);
    for (int t = 0; t < 80; ++t) {
        auto m = testgen::random_torsion_module(rng);
        const int a = 9;
        CHECK(iota_twist(iota_twist(m, a), a) == m);
    }
    for (int t = 0; t < 40; ++t) {
        std::vector<TorsionPart> parts;
        int d = 1 + static_cast<int>(rng() % 6);
        std::vector<BigInt> c;
        for (int i = 0; i < d; ++i) c.push_back(BigInt(5 * static_cast<long long>(rng() % 100)));
        c.emplace_back(1);
        parts.emplace_back(DistinguishedPoly(5, iwasawa::IntPoly(std::move(c))),
                           1 + static_cast<int>(rng() % 3));
        ElementaryModule m(5, 1, 0, {}, std::move(parts));
        const int a = 9;
        CHECK(iota_twist(iota_twist(m, a), a) == m);
    }
}

TEST_CASE("canonical form is order independent") {
    auto a = make(3, {1, 3, 2}, {{{3, 3, 1}, 1}, {{0, 1}, 2}, {{0, 1}, 3}});
    auto b = make(3, {3, 2, 1}, {{{0, 1}, 3}, {{3, 3, 1}, 1}, {{0, 1}, 2}});
    CHECK(a == b);
    CHECK(a.mu_exponents == std::vector<int>{3, 2, 1});
}

TEST_CASE("module validation") {
    CHECK_THROWS_AS(make(3, {0}, {}), iwasawa::InvalidArgument);
    CHECK_THROWS_AS(make(3, {}, {{{1}, 1}}), iwasawa::InvalidArgument);  // degree-0 block
    std::vector<TorsionPart> ps;
    ps.emplace_back(DistinguishedPoly::from_ints(5, {5, 1}), 1);
    CHECK_THROWS_AS(ElementaryModule(3, 1, 0, {}, std::move(ps)), iwasawa::PrimeMismatch);
}
