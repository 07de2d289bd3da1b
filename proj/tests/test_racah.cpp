#include <doctest.h>

#include "heunalg/cli/sampler.hpp"
#include "heunalg/linalg.hpp"
#include "heunalg/racah.hpp"
#include "support.hpp"

using namespace heunalg;

namespace {

RacahParams fixed() {
    RacahParams p;
    p.alpha = -3;
    p.beta = Rational(1, 2);
    p.gamma = Rational(1, 2);
    p.delta = Rational(1, 3);
    p.N = 2;
    p.truncation = RacahTruncation::alpha;
    return p;
}

std::vector<RacahParams> sampled(int count) {
    cli::SamplingConfig sc;
    sc.seed = 77;
    cli::Sampler s(sc, 9);
    std::vector<RacahParams> out;
    const RacahTruncation order[] = {RacahTruncation::alpha, RacahTruncation::beta_delta, RacahTruncation::gamma};
    for (int i = 0; i < count; ++i) out.push_back(s.racah(order[i % 3]));
    return out;
}

bool no_hard_failures(const CheckReport& rep) {
    for (const auto& e : rep.entries())
        if (e.verdict == Verdict::fail && e.category != Category::paper_claim) {
            MESSAGE(e.check << ": " << e.detail);
            return false;
        }
    return true;
}

}  // namespace

TEST_CASE("validate names the violated guard") {
    RacahParams p = fixed();
    p.alpha = -2;
    CHECK_THROWS_AS(validate(p), PreconditionError);

    RacahParams g = fixed();
    g.gamma = 0;
    g.delta = 0;
    try {
        validate(g);
        FAIL("expected rejection");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("theta") != std::string::npos);
    }

    // alpha + beta + 1 = -1 makes n(n + alpha + beta + 1) vanish at n = 0 and n = 1
    RacahParams c = fixed();
    c.beta = 1;
    CHECK_THROWS_AS(validate(c), PreconditionError);
}

TEST_CASE("realization: X diagonal on lambda, Y kills constants, K3 = [Y, X]") {
    const RacahRealization real = racah_realization(fixed());
    CHECK(real.X == Matrix::diagonal(real.grid.lambda));
    CHECK(real.X(2, 2) == Rational(23, 3));
    const std::vector<Rational> ones(3, Rational(1));
    for (const Rational& v : real.Y.apply(ones)) CHECK(v.is_zero());
    CHECK(real.K3 == commutator(real.Y, real.X));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i > j + 1 || j > i + 1) CHECK(real.Y(i, j).is_zero());
}

TEST_CASE("fitted constants on the fixed set") {
    const RacahRealization real = racah_realization(fixed());
    const auto k = fit_racah_constants(real);
    REQUIRE(k.has_value());
    CHECK(k->a1 == Rational(-2));
    CHECK(k->a2 == Rational(-2));

    // b and d1 read off the diagonal of [K2,K3] - a1{K1,K2} - a2 K2^2 - c1 K1, which must equal b K2 + d1.
    const Matrix M = commutator(real.X, real.K3) - anticommutator(real.Y, real.X) * k->a1 - real.X * real.X * k->a2 -
                     real.Y * k->c1;
    const auto& lam = real.grid.lambda;
    const Rational b = (M(1, 1) - M(0, 0)) / (lam[1] - lam[0]);
    const Rational d1 = M(0, 0) - b * lam[0];
    CHECK(M == real.X * b + Matrix::scalar(3, d1));
    CHECK(k->b == b);
    CHECK(k->d1 == d1);
    CHECK(racah_b_fitted_form(real.params) == b);

    const RacahConstants pc = RacahConstants::closed_form(real.params);
    CHECK(pc.a1 == k->a1);
    CHECK(pc.a2 == k->a2);
    CHECK(pc.c1 == k->c1);
    CHECK(pc.c2 == k->c2);
    CHECK(pc.d1 == k->d1);
    CHECK(pc.d2 == k->d2);
    CHECK(pc.b != k->b);
}

TEST_CASE("verify_racah on the fixed set") {
    const CheckReport rep = verify_racah(racah_realization(fixed()));
    CHECK(rep.passed("relation_1_definitional"));
    CHECK(rep.passed("fit_unique"));
    CHECK(rep.passed("fit_residuals_zero"));
    CHECK(rep.passed("fitted_a1_a2_minus_two"));
    CHECK(rep.passed("jacobi"));
    CHECK(rep.passed("constant_b_fitted_form"));
    const CheckEntry* b = rep.find("constant_b");
    REQUIRE(b != nullptr);
    CHECK(b->verdict == Verdict::fail);
    CHECK(b->category == Category::paper_claim);
    CHECK(b->witness.size() == 2);
}

TEST_CASE("Casimir is central, scalar and matches the closed form") {
    const RacahRealization real = racah_realization(fixed());
    const CasimirResult c = casimir_racah(real);
    for (const Matrix* g : {&real.X, &real.Y, &real.K3}) CHECK(commutator(c.C, *g).is_zero());
    REQUIRE(c.C.scalar_value().has_value());
    CHECK(*c.C.scalar_value() == real.constants.C);
    CHECK(c.report.passed("casimir_closed_form"));
}

TEST_CASE("spectrum of Y") {
    const RacahRealization real = racah_realization(fixed());
    const auto ev = real.params.eigenvalues();
    CHECK(ev == std::vector<Rational>{0, Rational(-1, 2), 1});
    CHECK(char_poly(real.Y) == Polynomial::from_roots(ev));
}

TEST_CASE("reduced and equitable forms") {
    const RacahRealization real = racah_realization(fixed());
    const ReducedRacah red = to_reduced(real);
    CHECK(red.report.all_passed());
    const EquitableRacah eq = to_equitable(red, real);
    CHECK(eq.V1 + eq.V2 + eq.V3 == Matrix::scalar(3, 2 * red.d));
    CHECK(commutator(eq.V1, eq.V2) == commutator(eq.V2, eq.V3));
    CHECK(commutator(eq.V2, eq.V3) == commutator(eq.V3, eq.V1));
    CHECK(eq.report.all_passed());
}

TEST_CASE("sampled parameter sets across all truncations") {
    for (const RacahParams& p : sampled(15)) {
        CAPTURE(to_string(p.truncation));
        CAPTURE(p.N);
        const RacahRealization real = racah_realization(p);
        const auto k = fit_racah_constants(real);
        REQUIRE(k.has_value());
        CHECK(k->a1 == Rational(-2));
        CHECK(k->a2 == Rational(-2));
        CHECK(k->b == racah_b_fitted_form(p));
        CHECK(char_poly(real.Y) == Polynomial::from_roots(p.eigenvalues()));
        const CheckReport rep = racah_suite(p);
        CHECK(no_hard_failures(rep));
        CHECK(rep.passed("casimir_central"));
        CHECK(rep.passed("casimir_scalar"));
        CHECK(rep.passed("equitable_sum"));
        CHECK(rep.passed("chi_K1"));
    }
}

TEST_CASE("racah_suite entries are deterministic") {
    const CheckReport a = racah_suite(fixed());
    const CheckReport b = racah_suite(fixed());
    REQUIRE(a.entries().size() == b.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        CHECK(a.entries()[i].check == b.entries()[i].check);
        CHECK(a.entries()[i].verdict == b.entries()[i].verdict);
        CHECK(a.entries()[i].witness == b.entries()[i].witness);
    }
}
