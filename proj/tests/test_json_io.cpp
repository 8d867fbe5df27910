#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "iwasawa/json_io.hpp"

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/iwasawa_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("module spec round trip") {
    TempFile f("mod.json", R"({
        "p": 3, "f": 1, "free_rank": 0,
        "mu_exponents": [2, 1],
        "torsion": [ { "poly": [0, 1], "beta": 2 }, { "poly": [3, 3, 1], "beta": 1 } ]
    })");
    auto m = iwasawa::load_module_spec(f.path);
    CHECK(m.p == 3);
    CHECK(m.mu_exponents == std::vector<int>{2, 1});
    REQUIRE(m.torsion_parts.size() == 2);
    CHECK(mu_invariant(m) == 3);
    CHECK(lambda_invariant(m) == 4);
}

TEST_CASE("module spec defaults and errors") {
    TempFile f("mod2.json", R"({ "p": 5 })");
    auto m = iwasawa::load_module_spec(f.path);
    CHECK(m.residue_exponent == 1);
    CHECK(m.is_zero());

    TempFile bad("mod3.json", R"({ "p": 5, "torsion": [ { "poly": [1, 1], "beta": 1 } ] })");
    CHECK_THROWS_AS((void)iwasawa::load_module_spec(bad.path), iwasawa::InvalidArgument);

    TempFile garbage("mod4.json", "{ not json");
    CHECK_THROWS_AS((void)iwasawa::load_module_spec(garbage.path), iwasawa::ParseError);

    CHECK_THROWS_AS((void)iwasawa::load_module_spec("/nonexistent/path.json"),
                    iwasawa::ParseError);
}

TEST_CASE("newform records: single and array, extra fields ignored") {
    TempFile one("nf1.json", R"js({ "label": "11.4.a", "N": 11, "k": 4, "M": 1,
                                  "coefficient_field": "sqrt(3)", "an": [1, 2] })js");
    auto rs = iwasawa::load_newform_records(one.path);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].label == "11.4.a");
    CHECK(rs[0].level == 11);
    CHECK(rs[0].weight == 4);
    CHECK(rs[0].nebentypus_conductor == 1);

    TempFile arr("nf2.json", R"([ { "label": "a", "N": 13, "k": 2, "M": 13 },
                                  { "label": "b", "N": 10, "k": 4, "M": 5 } ])");
    auto rs2 = iwasawa::load_newform_records(arr.path);
    REQUIRE(rs2.size() == 2);
    CHECK(rs2[1].nebentypus_conductor == 5);

    TempFile bad("nf3.json", R"({ "label": "x", "N": 12, "k": 2, "M": 1 })");
    CHECK_THROWS_AS((void)iwasawa::load_newform_records(bad.path), iwasawa::NotSquareFree);
}

TEST_CASE("big torsion coefficients may arrive as strings") {
    TempFile f("mod5.json", R"({ "p": 3,
        "torsion": [ { "poly": ["243", "0", "1"], "beta": 1 } ] })");
    auto m = iwasawa::load_module_spec(f.path);
    REQUIRE(m.torsion_parts.size() == 1);
    CHECK(m.torsion_parts[0].poly.poly.coeff(0) == iwasawa::BigInt(243));
}
