#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

// End-to-end checks against the built binary: output formats are part of the
// contract (ascending comma-separated coefficients, stable report lines,
// documented exit codes).

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(IWASAWA_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 512> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string data(const std::string& name) {
    return std::string(IWASAWA_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cli phi prints exact ascending coefficients") {
    auto r = run("phi --p 3 --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3,3,1\n");
    auto r2 = run("phi --p 5 --n 1");
    CHECK(r2.out == "5,10,10,5,1\n");
    auto r3 = run("phi --p 3 --n 0");
    CHECK(r3.out == "0,1\n");
}

TEST_CASE("cli weierstrass") {
    auto r = run("weierstrass --p 3 --prec-p 4 --prec-x 8 --coeffs 0,3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mu: 1\n") != std::string::npos);
    CHECK(r.out.find("P: 0,1\n") != std::string::npos);
    CHECK(r.out.find("unit: 1\n") != std::string::npos);

    auto r2 = run("weierstrass --p 3 --prec-p 2 --prec-x 6 --coeffs 9,18");
    CHECK(r2.exit_code == 2);
    CHECK(r2.out.rfind("error:", 0) == 0);
}

TEST_CASE("cli module-inv") {
    auto r = run("module-inv --spec " + data("module_u.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mu: 1\n") != std::string::npos);
    CHECK(r.out.find("lambda: 2\n") != std::string::npos);
    CHECK(r.out.find("char: pi^1 (0,1)^2\n") != std::string::npos);
}

TEST_CASE("cli greenberg compare") {
    auto r = run("greenberg compare --u " + data("module_u.json") + " --v " +
                 data("module_v.json") + " --f 0,1 --m-max 4 --e-max 3 --n-max 3");
    // different lambda-parts, same pi-parts: criteria disagree with each
    // other's verdicts but each one agrees with itself
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("agreement: ok") != std::string::npos);

    auto same = run("greenberg compare --u " + data("module_u.json") + " --v " +
                    data("module_u.json") + " --f 0,1");
    CHECK(same.exit_code == 0);

    auto bad = run("greenberg compare --u /nonexistent.json --v " + data("module_v.json") +
                   " --f 0,1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.rfind("error:", 0) == 0);
}

TEST_CASE("cli gr-rhs") {
    auto r = run("gr-rhs --p 3 --ranks 2,4,4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("e: 2 1 0\n") != std::string::npos);
    CHECK(r.out.find("rhs: Phi0^1 Phi1^0\n") != std::string::npos);
    CHECK(r.out.find("iota_invariant: yes\n") != std::string::npos);

    auto bad = run("gr-rhs --p 3 --ranks 0,1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.rfind("error: non_integral_exponent", 0) == 0);
}

TEST_CASE("cli hcyc check exit codes") {
    auto pass = run("hcyc check --newform " + data("newform-13-2.json") + " --p 5 --i 0");
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("13.2.e 5 0 pass") != std::string::npos);

    auto fail = run("hcyc check --newform " + data("newform-13-2.json") + " --p 5 --i 1");
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("13.2.e 5 1 fail") != std::string::npos);
    CHECK(fail.out.find("ORDER_DIVIDES_1_MINUS_K_PLUS_I") != std::string::npos);

    auto invalid = run("hcyc check --newform " + data("newform-13-2.json") + " --p 13 --i 0");
    CHECK(invalid.exit_code == 2);
    CHECK(invalid.out.rfind("error: inadmissible_query", 0) == 0);
}

TEST_CASE("cli hcyc scan format and determinism") {
    std::string cmd = "hcyc scan --newform " + data("newform-11-4.json") + " --p-max 20 --i 0";
    auto r1 = run(cmd);
    auto r2 = run(cmd);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);  // byte-stable
    CHECK(r1.out.find("11.4.a 3 0 fail") != std::string::npos);
    CHECK(r1.out.find("11.4.a 7 0 pass") != std::string::npos);
    CHECK(r1.out.find("11.4.a 11 0 inadmissible") != std::string::npos);
}

TEST_CASE("cli usage errors") {
    auto r = run("phi --p 3");
    CHECK(r.exit_code == 2);
    CHECK(r.out.rfind("error:", 0) == 0);
    auto r2 = run("nonsense");
    CHECK(r2.exit_code == 2);
    auto v = run("--version");
    CHECK(v.exit_code == 0);
}
