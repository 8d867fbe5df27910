// Command-line front end: exact Iwasawa-algebra arithmetic, Lambda-module
// invariants, pseudo-isomorphism criteria, rank-sequence products, and the
// newform local hypothesis checker.
//
// Exit codes: 0 success/pass, 1 hypothesis failure (hcyc check), 2 invalid
// input or usage, 3 internal equivalence violation (greenberg compare).

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "iwasawa/coinvariants.hpp"
#include "iwasawa/elementary_module.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/greenberg.hpp"
#include "iwasawa/int_poly.hpp"
#include "iwasawa/json_io.hpp"
#include "iwasawa/newform.hpp"
#include "iwasawa/rank_sequence.hpp"
#include "iwasawa/series.hpp"
#include "iwasawa/weierstrass.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::vector<iwasawa::BigInt> parse_bigint_list(const std::string& csv) {
    std::vector<iwasawa::BigInt> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw iwasawa::ParseError("empty entry in integer list");
        out.push_back(iwasawa::BigInt::from_string(tok));
    }
    if (out.empty()) throw iwasawa::ParseError("empty integer list");
    return out;
}

std::vector<long long> parse_i64_list(const std::string& csv) {
    std::vector<long long> out;
    for (const auto& b : parse_bigint_list(csv)) out.push_back(b.to_i64());
    return out;
}

struct Args {
    std::uint64_t p = 3;
    unsigned n = 0;
    int prec_p = 8;
    int prec_x = 16;
    std::string coeffs;
    std::string ranks;
    std::string spec_path, u_path, v_path, f_coeffs;
    int m_max = 4;
    int e_max = 3;
    unsigned n_max = 3;
    std::string newform_path;
    std::uint64_t hp = 5;
    int hi = 0;
    bool i_all = false;
    std::uint64_t p_max = 100;
    bool has_i = false;
};

int run_phi(const Args& a) {
    auto f = iwasawa::cyclotomic_phi(a.n, a.p);
    std::cout << f.to_string() << "\n";
    return 0;
}

int run_weierstrass(const Args& a) {
    auto cs = parse_bigint_list(a.coeffs);
    iwasawa::LambdaSeries f(a.p, a.prec_p, a.prec_x, cs);
    auto w = iwasawa::weierstrass_prepare(f);
    std::cout << "mu: " << w.mu << "\n";
    std::cout << "P: " << w.distinguished_part.to_string() << "\n";
    std::cout << "unit: " << w.unit_part.coeff(0).to_string() << "\n";
    std::cout << "precision: p^" << w.result_p_precision << " X^" << w.result_x_precision
              << "\n";
    return 0;
}

int run_module_inv(const Args& a) {
    auto m = iwasawa::load_module_spec(a.spec_path);
    std::cout << "mu: " << mu_invariant(m) << "\n";
    std::cout << "lambda: " << lambda_invariant(m) << "\n";
    if (m.is_torsion())
        std::cout << "char: " << char_ideal(m).to_string() << "\n";
    else
        std::cout << "char: undefined (free rank " << m.free_rank << ")\n";
    std::cout << "canonical: " << m.to_string() << "\n";
    return 0;
}

int run_greenberg(const Args& a) {
    auto u = iwasawa::load_module_spec(a.u_path);
    auto v = iwasawa::load_module_spec(a.v_path);
    auto fc = parse_bigint_list(a.f_coeffs);
    iwasawa::DistinguishedPoly f(u.p, iwasawa::IntPoly(fc));
    auto r1 = criterion1_check(u, v, f, a.m_max);
    auto r2 = criterion2_check(u, v, a.e_max, a.n_max);

    std::cout << "criterion 1 (F-part equality vs twisted dual coranks, m <= " << a.m_max
              << ")\n";
    std::cout << "  side_a: " << (r1.side_a ? "equal" : "different") << "\n";
    std::cout << "  side_b: " << (r1.side_b ? "equal" : "different") << "\n";
    std::cout << "  coranks_u:";
    for (auto c : r1.coranks_u) std::cout << " " << c;
    std::cout << "\n  coranks_v:";
    for (auto c : r1.coranks_v) std::cout << " " << c;
    std::cout << "\n";

    std::cout << "criterion 2 (pi-part equality vs coinvariant growth, e <= " << a.e_max
              << ", declared n <= " << a.n_max << ")\n";
    std::cout << "  side_a: " << (r2.side_a ? "equal" : "different") << "\n";
    std::cout << "  side_b: " << (r2.side_b ? "bounded" : "unbounded") << "\n";
    for (std::size_t e = 0; e < r2.d_table.size(); ++e) {
        std::cout << "  d(e=" << (e + 1) << ", n=0..):";
        for (auto d : r2.d_table[e]) std::cout << " " << d;
        std::cout << "  [saturated at n=" << r2.saturation_n[e] << "]\n";
    }

    bool ok = r1.agreement() && r2.agreement();
    std::cout << "agreement: " << (ok ? "ok" : "VIOLATION") << "\n";
    return ok ? 0 : 3;
}

int run_gr_rhs(const Args& a) {
    iwasawa::RankSequence rs(a.p, parse_i64_list(a.ranks));
    auto e = exponent_sequence(rs);
    auto rhs = gr_rhs(rs);
    std::cout << "e:";
    for (auto x : e) std::cout << " " << x;
    std::cout << "\n";
    std::cout << "rhs: " << rhs.to_string() << "\n";
    std::cout << "degree: " << rhs.expanded_degree() << "\n";
    std::cout << "iota_invariant: " << (verify_iota_invariance(rhs) ? "yes" : "no") << "\n";
    return 0;
}

void print_report_line(const iwasawa::HypothesisReport& r) {
    std::cout << r.label << " " << r.p << " " << r.i << " " << to_string(r.verdict);
    for (const auto& d : r.per_prime)
        for (auto reason : d.failures)
            std::cout << " " << d.ell << ":" << to_string(reason);
    std::cout << "\n";
}

int run_hcyc_check(const Args& a) {
    auto recs = iwasawa::load_newform_records(a.newform_path);
    bool all_pass = true;
    for (const auto& rec : recs) {
        auto rep = iwasawa::check_hcyc(rec, iwasawa::TwistQuery{a.hp, a.hi});
        print_report_line(rep);
        for (const auto& d : rep.per_prime) {
            std::cout << "  ell=" << d.ell << " order=" << d.order << " branch="
                      << (d.branch == iwasawa::PrimeBranch::DividesM ? "M" : "N/M") << " "
                      << (d.pass() ? "ok" : "fail") << "\n";
        }
        if (rep.verdict != iwasawa::Verdict::Pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

int run_hcyc_scan(const Args& a) {
    auto recs = iwasawa::load_newform_records(a.newform_path);
    std::vector<int> is;
    if (!a.i_all && a.has_i) is.push_back(a.hi);
    for (const auto& rec : recs) {
        auto reports = iwasawa::scan(rec, a.p_max, is);
        for (const auto& r : reports) print_report_line(r);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for cyclotomic Iwasawa invariants"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Args a;

    auto* phi = app.add_subcommand("phi", "cyclotomic polynomial Phi_n in 1+X, exact coefficients");
    phi->add_option("--p", a.p, "odd prime")->required();
    phi->add_option("--n", a.n, "layer index n >= 0")->required();

    auto* wp = app.add_subcommand("weierstrass", "Weierstrass preparation of a truncated series");
    wp->add_option("--p", a.p, "odd prime")->required();
    wp->add_option("--prec-p", a.prec_p, "p-adic precision a")->required();
    wp->add_option("--prec-x", a.prec_x, "X-adic precision b")->required();
    wp->add_option("--coeffs", a.coeffs, "ascending coefficients c0,c1,...")->required();

    auto* mi = app.add_subcommand("module-inv", "invariants of a structure-theorem module spec");
    mi->add_option("--spec", a.spec_path, "module spec JSON file")->required();

    auto* gb = app.add_subcommand("greenberg", "pseudo-isomorphism criteria");
    auto* gc = gb->add_subcommand("compare", "run both criteria on two module specs");
    gc->add_option("--u", a.u_path, "first module spec file")->required();
    gc->add_option("--v", a.v_path, "second module spec file")->required();
    gc->add_option("--f", a.f_coeffs, "distinguished polynomial c0,c1,... for criterion 1")
        ->required();
    gc->add_option("--m-max", a.m_max, "twist exponents sampled by criterion 1");
    gc->add_option("--e-max", a.e_max, "pi-power window for criterion 2");
    gc->add_option("--n-max", a.n_max, "declared layer window for criterion 2");

    auto* gr = app.add_subcommand("gr-rhs", "cyclotomic factor product from a rank sequence");
    gr->add_option("--p", a.p, "odd prime")->required();
    gr->add_option("--ranks", a.ranks, "r0,r1,... Mordell-Weil ranks up the tower")->required();

    auto* hc = app.add_subcommand("hcyc", "local hypothesis checks for newform records");
    auto* hck = hc->add_subcommand("check", "decide one (p, i) twist");
    hck->add_option("--newform", a.newform_path, "newform record JSON file")->required();
    hck->add_option("--p", a.hp, "odd prime p, coprime to the level")->required();
    hck->add_option("--i", a.hi, "twist 0 <= i <= k")->required();
    auto* hcs = hc->add_subcommand("scan", "sweep odd primes p <= p-max");
    hcs->add_option("--newform", a.newform_path, "newform record JSON file")->required();
    hcs->add_option("--p-max", a.p_max, "upper bound for the prime sweep")->required();
    auto* iopt = hcs->add_option("--i", a.hi, "single twist value");
    hcs->add_flag("--i-all", a.i_all, "all twists 0..k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help / --version
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (phi->parsed()) return run_phi(a);
        if (wp->parsed()) return run_weierstrass(a);
        if (mi->parsed()) return run_module_inv(a);
        if (gb->parsed()) {
            if (!gc->parsed()) {
                std::cerr << "error: greenberg needs the compare subcommand\n";
                return 2;
            }
            return run_greenberg(a);
        }
        if (gr->parsed()) return run_gr_rhs(a);
        if (hc->parsed()) {
            if (hck->parsed()) return run_hcyc_check(a);
            if (hcs->parsed()) {
                a.has_i = iopt->count() > 0;
                if (a.has_i && a.i_all) {
                    std::cerr << "error: --i and --i-all are mutually exclusive\n";
                    return 2;
                }
                return run_hcyc_scan(a);
            }
            std::cerr << "error: hcyc needs check or scan\n";
            return 2;
        }
    } catch (const iwasawa::Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
