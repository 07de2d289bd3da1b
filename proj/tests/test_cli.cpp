#include <doctest.h>

#include <set>

#include "heunalg/cli/commands.hpp"
#include "heunalg/cli/config.hpp"
#include "heunalg/cli/run.hpp"
#include "heunalg/cli/sampler.hpp"
#include "heunalg/racah.hpp"
#include "heunalg/relalg/fixtures.hpp"
#include "heunalg/relalg/parser.hpp"

using namespace heunalg;
using namespace heunalg::cli;

namespace {

const char* kRacahConfig = R"(# fixed Racah set
[sampling]
seed = 5
trials = 0

[racah]
alpha = -3
beta = 2/5
gamma = 1/2
delta = 1/3
N = 2
)";

std::size_t error_line(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.line();
    }
    FAIL("expected ConfigError");
    return 0;
}

std::string error_text(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

std::vector<std::string> keys(const CheckReport& r, const std::string& suite) {
    std::vector<std::string> out;
    for (const auto& e : r.entries())
        if (e.suite == suite)
            out.push_back(e.check + "|" + e.anchor + "|" + std::to_string(e.trial) + "|" +
                          std::string(to_string(e.verdict)) + "|" + e.detail);
    return out;
}

}  // namespace

TEST_CASE("config parses the fixed Racah block") {
    const Config cfg = parse_config(kRacahConfig);
    REQUIRE(cfg.racah);
    CHECK(cfg.racah->alpha == Rational(-3));
    CHECK(cfg.racah->beta == Rational(2, 5));
    CHECK(cfg.racah->N == 2);
    CHECK(cfg.racah->truncation == RacahTruncation::alpha);
    CHECK(cfg.sampling.seed == 5);
    CHECK(!cfg.bi);
}

TEST_CASE("config errors carry line numbers") {
    CHECK(error_line("[sampling]\nseed = 1\nbogus = 2\n") == 3);
    CHECK(error_line("[sampling]\n\n[nowhere]\n") == 3);
    CHECK(error_line("[racah]\nalpha = 1/0\n") == 2);
    CHECK(error_line("[racah]\nalpha = x\n") == 2);
    CHECK(error_line("[sampling]\nseed = 1\nseed = 2\n") == 3);
    CHECK(error_line("seed = 1\n") == 1);
    CHECK(error_line("[sampling]\nseed\n") == 2);
    CHECK(error_line("[sampling\n") == 1);
    CHECK(error_line("[sampling]\n[sampling]\n") == 2);
    CHECK(error_line("[sampling]\nn_min = 5\nn_max = 3\n") == 1);
}

TEST_CASE("a missing key is reported at the section header") {
    const std::string text = "[sampling]\nseed = 1\n\n[racah]\nalpha = -3\nbeta = 1/2\ngamma = 1/2\nN = 2\n";
    CHECK(error_line(text) == 4);
    CHECK(error_text(text).find("delta") != std::string::npos);
}

TEST_CASE("bad case and pairing values are rejected") {
    CHECK(error_line("[bi]\ncase = odd\nrho1 = 1\nrho2 = 1\nr1 = 1\nr2 = 1\nN = 3\n") == 2);
    const std::string even = "[bi]\ncase = even\nrho1 = 1\nrho2 = 1\nr1 = 1\nr2 = 1\nN = 4\ni = 3\nj = 1\n";
    CHECK(error_line(even) == 8);
}

TEST_CASE("sampler respects its bounds") {
    SamplingConfig sc;
    sc.seed = 11;
    sc.numerator_bound = 4;
    sc.denominator_bound = 3;
    sc.n_min = 3;
    sc.n_max = 5;
    Sampler s(sc, 1);
    for (int i = 0; i < 500; ++i) {
        const Rational r = s.rational();
        CHECK(r.abs() <= Rational(4));
        CHECK(std::stoi(r.denominator_str()) <= 3);
        const int n = s.grid_size(-1);
        CHECK(n >= 3);
        CHECK(n <= 5);
        CHECK(s.grid_size(0) == 4);
        CHECK(s.grid_size(1) % 2 == 1);
    }
}

TEST_CASE("sampler without a grid size of the right parity reports it") {
    SamplingConfig sc;
    sc.n_min = 2;
    sc.n_max = 2;
    Sampler s(sc, 1);
    CHECK_THROWS_AS(s.bi(BICase::odd_rho), SamplingError);
}

TEST_CASE("sampler streams are deterministic and independent") {
    SamplingConfig sc;
    sc.seed = 99;
    Sampler a(sc, 3), b(sc, 3), c(sc, 4);
    int same = 0;
    for (int i = 0; i < 50; ++i) {
        const Rational x = a.rational();
        CHECK(x == b.rational());
        if (x == c.rational()) ++same;
    }
    CHECK(same < 50);
}

TEST_CASE("sampled Racah sets meet their truncation") {
    SamplingConfig sc;
    sc.seed = 3;
    Sampler s(sc, 1);
    for (int i = 0; i < 30; ++i) {
        const RacahParams a = s.racah(RacahTruncation::alpha);
        CHECK(a.alpha == Rational(-a.N - 1));
        const RacahParams b = s.racah(RacahTruncation::beta_delta);
        CHECK(b.beta + b.delta == Rational(-b.N - 1));
        const RacahParams g = s.racah(RacahTruncation::gamma);
        CHECK(g.gamma == Rational(-g.N - 1));
    }
}

TEST_CASE("suite names") {
    CHECK(parse_suites("heun-racah") == std::vector<Suite>{Suite::heun_racah});
    CHECK(parse_suites("heun_bi") == std::vector<Suite>{Suite::heun_bi});
    CHECK(parse_suites("all").size() == 5);
    try {
        parse_suites("racha");
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("bannai-ito") != std::string::npos);
    }
}

TEST_CASE("exit codes follow the failure categories") {
    CheckReport r("x");
    r.add("a", "a", Category::structural, true);
    CHECK(exit_code(r) == 0);
    r.skip("s", "a", Category::oracle, "not applicable");
    CHECK(exit_code(r) == 0);
    r.add("p", "a", Category::paper_claim, false);
    CHECK(exit_code(r) == 2);
    r.add("o", "a", Category::oracle, false);
    CHECK(exit_code(r) == 1);
    CheckReport s("y");
    s.add("t", "a", Category::structural, false);
    CHECK(exit_code(s) == 1);
}

TEST_CASE("fixed Racah run reports only the closed-form constant mismatch") {
    const Config cfg = parse_config(kRacahConfig);
    const CheckReport r = run(cfg, {Suite::racah});
    CHECK(!r.entries().empty());
    CHECK(r.count(Category::structural, Verdict::fail) == 0);
    CHECK(r.count(Category::oracle, Verdict::fail) == 0);
    CHECK(exit_code(r) == 2);
    for (const auto& e : r.entries()) CHECK(e.trial == 0);
}

TEST_CASE("runs are deterministic") {
    Config cfg = parse_config(kRacahConfig);
    cfg.sampling.trials = 4;
    const auto suites = parse_suites("all");
    const std::string a = report_json(run(cfg, suites), cfg, suites);
    const std::string b = report_json(run(cfg, suites), cfg, suites);
    CHECK(a == b);
    CHECK(a.find("\"entries\"") != std::string::npos);
}

TEST_CASE("a suite run alone reproduces its entries from the full run") {
    Config cfg = parse_config(kRacahConfig);
    cfg.sampling.trials = 3;
    const CheckReport all = run(cfg, parse_suites("all"));
    for (Suite s : parse_suites("all")) {
        const CheckReport one = run(cfg, {s});
        const std::string name = to_string(s);
        CHECK_MESSAGE(keys(one, name) == keys(all, name), name);
    }
}

TEST_CASE("fixed parameters with a vanishing theta(0) are rejected") {
    Config cfg = parse_config(kRacahConfig);
    cfg.racah->delta = Rational(-1, 2);
    bool threw = false;
    try {
        run(cfg, {Suite::racah});
    } catch (const RunError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("theta") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("export of the Racah multiplication operator") {
    const Config cfg = parse_config(kRacahConfig);
    const Matrix X = operator_matrix(cfg, "X");
    REQUIRE(X.dim() == 3);
    CHECK(X(0, 0) == Rational(0));
    CHECK(X(1, 1) == Rational(17, 6));
    CHECK(X(2, 2) == Rational(23, 3));
    CHECK(X(0, 1) == Rational(0));
    const Matrix Y = operator_matrix(cfg, "Y");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i > j + 1 || j > i + 1) CHECK(Y(i, j) == Rational(0));
    CHECK(export_csv(cfg, "X") == X.to_csv());
    CHECK(export_csv(cfg, "racah_grid").find("17/6") != std::string::npos);
}

TEST_CASE("unknown operators list the valid names") {
    const Config cfg = parse_config(kRacahConfig);
    try {
        operator_matrix(cfg, "K9");
        FAIL("expected UnknownOperator");
    } catch (const UnknownOperator& e) {
        const std::string msg = e.what();
        for (const auto& name : operator_names()) CHECK(msg.find(name) != std::string::npos);
    }
    CHECK_THROWS(operator_matrix(cfg, "B1"));
}

TEST_CASE("literal matrices") {
    const Matrix m = parse_literal_matrix("1,0;0,2");
    CHECK(m == Matrix::diagonal(std::vector<Rational>{1, 2}));
    CHECK(parse_literal_matrix("1/2, -3; 0, 1")(0, 1) == Rational(-3));
    CHECK_THROWS(parse_literal_matrix("1,2"));
    CHECK_THROWS(parse_literal_matrix("1,2;3"));
    CHECK_THROWS(parse_literal_matrix("1,x"));
}

TEST_CASE("fit on the Racah presentation recovers a1 = a2 = -2") {
    const Config cfg = parse_config(kRacahConfig);
    const auto pres = relalg::fixture("racah");
    const CheckReport r = fit_report(pres, fit_assignment(pres, cfg));
    const CheckEntry* fit = r.find("fit");
    REQUIRE(fit);
    CHECK(fit->passed());
    std::set<std::string> seen;
    for (const auto& [name, value] : fit->fitted_constants) {
        if (name == "a1" || name == "a2") CHECK(value == "-2");
        seen.insert(name);
    }
    CHECK(seen.count("a1") == 1);
    CHECK(seen.count("a2") == 1);
    for (std::size_t k = 1; k <= 3; ++k) CHECK(r.passed("residual_" + std::to_string(k)));
}

TEST_CASE("known scalars from the config constrain the fit") {
    Config cfg = parse_config(kRacahConfig);
    cfg.fit.scalars["a1"] = Rational(1);
    const auto pres = relalg::fixture("racah");
    const CheckReport r = fit_report(pres, fit_assignment(pres, cfg));
    const CheckEntry* fit = r.find("fit");
    REQUIRE(fit);
    CHECK(!fit->passed());
    CHECK(fit->detail == "no solution");
    REQUIRE(fit->witness.size() == 4);
    CHECK(fit->witness[3].first == "certificate_value");
    CHECK(fit->witness[3].second != "0");
}

TEST_CASE("literal generators and free directions") {
    Config cfg;
    cfg.fit.generators["A"] = "3,0;0,3";
    const auto pres = relalg::parse("gens A; scalars s t;\nA = s + t;\n");
    const CheckReport r = fit_report(pres, fit_assignment(pres, cfg));
    const CheckEntry* fit = r.find("fit");
    REQUIRE(fit);
    CHECK(fit->passed());
    CHECK(fit->detail == "underdetermined, 1 free directions");
    REQUIRE(fit->witness.size() == 1);
    CHECK(fit->witness[0].first == "free_1");
}

TEST_CASE("fit mappings must name presentation symbols") {
    Config cfg = parse_config(kRacahConfig);
    cfg.fit.scalars["zz"] = Rational(1);
    const auto pres = relalg::fixture("racah");
    CHECK_THROWS(fit_assignment(pres, cfg));
}
