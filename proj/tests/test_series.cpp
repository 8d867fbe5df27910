#include "doctest.h"

#include "iwasawa/series.hpp"

using iwasawa::BigInt;
using iwasawa::LambdaSeries;
using iwasawa::PadicInt;

TEST_CASE("series monomial product") {
    auto x = LambdaSeries::from_ints(3, 6, 8, {0, 1});
    auto x2 = x * x;
    CHECK(x2.coeff(2) == BigInt(1));
    CHECK(x2.coeff(0).is_zero());
    CHECK(x2.coeff(1).is_zero());
}

TEST_CASE("series geometric inverse identity") {
    // (1+X) * (1 - X + X^2 - ...) == 1 mod (p^a, X^b)
    for (std::uint64_t p : {3ull, 5ull}) {
        int a = 5, b = 12;
        auto one_plus_x = LambdaSeries::from_ints(p, a, b, {1, 1});
        std::vector<long long> alt;
        for (int k = 0; k < b; ++k) alt.push_back(k % 2 ? -1 : 1);
        auto geo = LambdaSeries::from_ints(p, a, b, alt);
        auto prod = one_plus_x * geo;
        auto one = LambdaSeries::from_ints(p, a, b, {1});
        CHECK(prod == one);
    }
}

TEST_CASE("series coefficientwise addition example") {
    auto f = LambdaSeries::from_ints(3, 4, 8, {3, 1});
    auto g = LambdaSeries::from_ints(3, 4, 8, {3, 2});
    auto s = f + g;
    CHECK(s.coeff(0) == BigInt(6));
    CHECK(s.coeff(1) == BigInt(3));
    CHECK(s.p_precision() == 4);
    CHECK(s.x_precision() == 8);
}

TEST_CASE("series precision bookkeeping") {
    auto f = LambdaSeries::from_ints(3, 4, 8, {1, 1});
    auto g = LambdaSeries::from_ints(3, 2, 5, {1, 1});
    auto s = f * g;
    CHECK(s.p_precision() == 2);
    CHECK(s.x_precision() == 5);
    auto h = LambdaSeries::from_ints(5, 4, 8, {1});
    CHECK_THROWS_AS((void)(f + h), iwasawa::PrimeMismatch);
}

TEST_CASE("scalar multiplication") {
    auto f = LambdaSeries::from_ints(3, 4, 8, {1, 2, 3});
    PadicInt s(3, 3, BigInt(2));
    auto g = s * f;
    CHECK(g.p_precision() == 3);
    CHECK(g.coeff(2) == BigInt(6));
}

TEST_CASE("series truncation and reduction invariants") {
    // coefficients reduce into [0, p^a), trailing zeros dropped, length <= b
    LambdaSeries f(3, 2, 3, {BigInt(-1), BigInt(9), BigInt(100), BigInt(7)});
    CHECK(f.stored_size() <= 3);
    CHECK(f.coeff(0) == BigInt(8));
    CHECK(f.coeff(1) == BigInt(0));
    CHECK(f.coeff(2) == BigInt(100 % 9));
}

TEST_CASE("iota_apply on X gives alternating geometric series") {
    auto img = iwasawa::iota_apply(iwasawa::x_poly(3), 4, 9);
    CHECK(img.coeff(0).is_zero());
    for (int k = 1; k < 9; ++k)
        CHECK(img.coeff(k) == iwasawa::mod_floor(BigInt(k % 2 ? -1 : 1), BigInt(81)));
}

TEST_CASE("iota_apply is affine in the constant") {
    // F = X + 3 maps to ((1+X)^{-1} - 1) + 3
    auto img = iwasawa::iota_apply(iwasawa::DistinguishedPoly::from_ints(3, {3, 1}), 4, 9);
    auto base = iwasawa::iota_apply(iwasawa::x_poly(3), 4, 9);
    auto three = LambdaSeries::from_ints(3, 4, 9, {3});
    CHECK(img == base + three);
}

TEST_CASE("iota_apply congruence helper tolerates differing precision") {
    auto u = iwasawa::iota_apply(iwasawa::x_poly(3), 4, 9);
    auto v = iwasawa::iota_apply(iwasawa::x_poly(3), 6, 12);
    CHECK(congruent(u, v));
}
