#include "heunalg/racah.hpp"

#include <set>

#include "heunalg/checks.hpp"
#include "heunalg/linalg.hpp"
#include "heunalg/relalg/fixtures.hpp"

namespace heunalg {

namespace {
const char* kRel = "racah-rel";
const char* kCasimir = "racah-casimir";
}  // namespace

std::string to_string(RacahTruncation t) {
    switch (t) {
        case RacahTruncation::alpha: return "alpha";
        case RacahTruncation::beta_delta: return "beta_delta";
        case RacahTruncation::gamma: return "gamma";
    }
    return "?";
}

RacahTruncation parse_racah_truncation(const std::string& text) {
    if (text == "alpha") return RacahTruncation::alpha;
    if (text == "beta_delta") return RacahTruncation::beta_delta;
    if (text == "gamma") return RacahTruncation::gamma;
    throw std::invalid_argument("unknown truncation '" + text + "' (expected alpha, beta_delta or gamma)");
}

std::vector<Rational> RacahParams::eigenvalues() const {
    std::vector<Rational> out;
    for (int n = 0; n <= N; ++n) out.push_back(Rational(n) * (Rational(n) + alpha + beta + 1));
    return out;
}

void validate(const RacahParams& p) {
    if (p.N < 1) throw PreconditionError("N must be at least 1");
    const Rational minus_n(-p.N);
    switch (p.truncation) {
        case RacahTruncation::alpha:
            if (p.alpha + 1 != minus_n) throw PreconditionError("truncation alpha+1 = -N fails");
            break;
        case RacahTruncation::beta_delta:
            if (p.beta + p.delta + 1 != minus_n) throw PreconditionError("truncation beta+delta+1 = -N fails");
            break;
        case RacahTruncation::gamma:
            if (p.gamma + 1 != minus_n) throw PreconditionError("truncation gamma+1 = -N fails");
            break;
    }
    try {
        (void)racah_grid(p.gamma, p.delta, p.N);
    } catch (const GridError& e) {
        throw PreconditionError(std::string("grid guard: ") + e.what());
    }
    const auto ev = p.eigenvalues();
    const std::set<Rational> distinct(ev.begin(), ev.end());
    if (distinct.size() != ev.size()) throw PreconditionError("eigenvalues n(n+alpha+beta+1) are not distinct");
}

RacahConstants RacahConstants::closed_form(const RacahParams& p) {
    const Rational &al = p.alpha, &be = p.beta, &ga = p.gamma, &de = p.delta;
    RacahConstants k;
    k.a1 = -2;
    k.a2 = -2;
    k.c1 = -(ga + de) * (ga + de + 2);
    k.c2 = -(al + be) * (al + be + 2);
    k.d1 = -(al + 1) * (ga + 1) * (be + de + 1) * (ga + de);
    k.d2 = -(al + 1) * (ga + 1) * (al + be) * (be + de + 1);
    k.b = 2 * (be * (de - al) - (al + be) * (ga + de + 2) - 2 * (ga + 1) * (de + 1));
    k.C = (al + 1) * (ga + 1) * (be + de + 1) *
          (2 * be * de - 2 * al + be * (al + 1) * (ga - 1) + (al - 1) * (ga + 1) * (de + 1));
    return k;
}

NamedValues RacahConstants::named() const {
    return {wv("a1", a1), wv("a2", a2), wv("b", b), wv("c1", c1), wv("c2", c2), wv("d1", d1), wv("d2", d2), wv("C", C)};
}

Rational racah_b_fitted_form(const RacahParams& p) {
    const Rational &al = p.alpha, &be = p.beta, &ga = p.gamma, &de = p.delta;
    return -2 * al * be - al * (ga + de + 2) + be * (de - ga - 2) - 2 * (ga + 1) * (de + 1);
}

std::vector<Rational> racah_B(const RacahParams& p) {
    const Rational &al = p.alpha, &be = p.beta, &ga = p.gamma, &de = p.delta;
    std::vector<Rational> out;
    for (int i = 0; i <= p.N; ++i) {
        const Rational x(i);
        out.push_back((x + al + 1) * (x + be + de + 1) * (x + ga + 1) * (x + ga + de + 1) /
                      ((2 * x + ga + de + 1) * (2 * x + ga + de + 2)));
    }
    return out;
}

std::vector<Rational> racah_D(const RacahParams& p) {
    const Rational &al = p.alpha, &be = p.beta, &ga = p.gamma, &de = p.delta;
    std::vector<Rational> out;
    for (int i = 0; i <= p.N; ++i) {
        const Rational x(i);
        out.push_back(x * (x - al + ga + de) * (x - be + ga) * (x + de) / ((2 * x + ga + de) * (2 * x + ga + de + 1)));
    }
    return out;
}

RacahRealization racah_realization(const RacahParams& p) {
    validate(p);
    RacahRealization r;
    r.params = p;
    r.grid = racah_grid(p.gamma, p.delta, p.N);
    r.X = Matrix::diagonal(r.grid.lambda);
    r.Y = build_difference_operator(racah_B(p), racah_D(p), r.grid, "racah-op").matrix;
    r.K3 = commutator(r.Y, r.X);
    r.constants = RacahConstants::closed_form(p);
    return r;
}

namespace {

relalg::Assignment racah_assignment(const RacahRealization& real) {
    relalg::Assignment asg;
    asg.set("K1", real.Y).set("K2", real.X).set("K3", real.K3);
    return asg;
}

void bind_constants(relalg::Assignment& asg, const RacahConstants& k) {
    asg.set("a1", k.a1).set("a2", k.a2).set("b", k.b).set("c1", k.c1).set("c2", k.c2).set("d1", k.d1).set("d2", k.d2);
}

}  // namespace

std::optional<RacahConstants> fit_racah_constants(const RacahRealization& real, relalg::FitResult* fit) {
    const relalg::Presentation pres = relalg::fixture("racah");
    relalg::Assignment asg = racah_assignment(real);
    for (const char* s : {"a1", "a2", "b", "c1", "c2", "d1", "d2"}) asg.set_unknown(s);
    relalg::FitResult f = relalg::fit_constants(pres, asg);
    if (fit) *fit = f;
    if (f.kind != SolveKind::unique) return std::nullopt;
    RacahConstants k;
    k.a1 = *f.value("a1");
    k.a2 = *f.value("a2");
    k.b = *f.value("b");
    k.c1 = *f.value("c1");
    k.c2 = *f.value("c2");
    k.d1 = *f.value("d1");
    k.d2 = *f.value("d2");
    const Matrix C = casimir_matrix(real.Y, real.X, k);
    k.C = C.scalar_value().value_or(C(0, 0));
    return k;
}

CheckReport verify_racah(const RacahRealization& real) {
    CheckReport rep("racah");
    const relalg::Presentation pres = relalg::fixture("racah");

    relalg::Assignment paper = racah_assignment(real);
    bind_constants(paper, real.constants);
    expect_zero(rep, "relation_1_definitional", kRel, Category::structural, relalg::evaluate(pres.relations[0], paper));
    expect_zero(rep, "relation_2_closed_form_constants", kRel, Category::paper_claim,
                relalg::evaluate(pres.relations[1], paper));
    expect_zero(rep, "relation_3_closed_form_constants", kRel, Category::paper_claim,
                relalg::evaluate(pres.relations[2], paper));

    relalg::FitResult fit;
    const auto fitted = fit_racah_constants(real, &fit);
    {
        CheckEntry& e = rep.add("fit_unique", kRel, Category::oracle, fitted.has_value(),
                                fitted ? "all seven constants determined" : "fit not unique");
        e.fitted_constants = fit.named_values();
        for (const auto& dir : fit.free_direction_text()) e.witness.emplace_back("free_direction", dir);
    }
    if (fitted) {
        bool zero = true;
        for (bool z : fit.residual_zero) zero = zero && z;
        CheckEntry& e = rep.add("fit_residuals_zero", kRel, Category::oracle, zero);
        e.fitted_constants = fit.named_values();
        CheckEntry& a = rep.add("fitted_a1_a2_minus_two", kRel, Category::oracle,
                                fitted->a1 == Rational(-2) && fitted->a2 == Rational(-2));
        a.witness = {wv("a1", fitted->a1), wv("a2", fitted->a2)};

        const RacahConstants& pc = real.constants;
        const std::pair<const char*, std::pair<Rational, Rational>> pairs[] = {
            {"constant_a1", {fitted->a1, pc.a1}}, {"constant_a2", {fitted->a2, pc.a2}},
            {"constant_b", {fitted->b, pc.b}},    {"constant_c1", {fitted->c1, pc.c1}},
            {"constant_c2", {fitted->c2, pc.c2}}, {"constant_d1", {fitted->d1, pc.d1}},
            {"constant_d2", {fitted->d2, pc.d2}}};
        for (const auto& [name, v] : pairs) expect_equal(rep, name, "racah constants", Category::paper_claim, v.first, v.second, "fitted", "closed_form");
        expect_equal(rep, "constant_b_fitted_form", "racah constants", Category::oracle, fitted->b,
                     racah_b_fitted_form(real.params), "fitted", "fitted_form");
    }

    const Matrix& K1 = real.Y;
    const Matrix& K2 = real.X;
    const Matrix& K3 = real.K3;
    const Matrix jac = commutator(K1, commutator(K2, K3)) + commutator(K3, commutator(K1, K2)) +
                       commutator(K2, commutator(K3, K1));
    expect_zero(rep, "jacobi", "jacobi-racah", Category::structural, jac);
    return rep;
}

Matrix casimir_matrix(const Matrix& K1, const Matrix& K2, const RacahConstants& k) {
    const Matrix K3 = commutator(K1, K2);
    const Matrix K1s = K1 * K1;
    const Matrix K2s = K2 * K2;
    return anticommutator(K1s, K2) * k.a1 + anticommutator(K1, K2s) * k.a2 + anticommutator(K1, K2) * (k.a1 * k.a2 + k.b) +
           K1s * (k.a1 * k.a1 + k.c1) + K2s * (k.a2 * k.a2 + k.c2) + K3 * K3 + K1 * (k.a1 * k.b + 2 * k.d1) +
           K2 * (k.a2 * k.b + 2 * k.d2);
}

CasimirResult casimir_racah(const RacahRealization& real) {
    CasimirResult out{Matrix(), CheckReport("racah")};
    CheckReport& rep = out.report;
    const auto fitted = fit_racah_constants(real);
    if (!fitted) {
        rep.skip("casimir_central", kCasimir, Category::oracle, "constants not determined");
        return out;
    }
    out.C = casimir_matrix(real.Y, real.X, *fitted);
    rep.add(relalg::check_central(out.C, {{"K1", real.Y}, {"K2", real.X}, {"K3", real.K3}}, "racah", "casimir_central",
                                  kCasimir));
    expect_scalar(rep, "casimir_scalar", kCasimir, Category::oracle, out.C);
    const auto s = out.C.scalar_value();
    if (s) {
        expect_equal(rep, "casimir_closed_form", "racah constants", Category::paper_claim, *s, real.constants.C,
                     "matrix_scalar", "closed_form");
    } else {
        rep.skip("casimir_closed_form", "racah constants", Category::paper_claim, "Casimir matrix is not scalar");
    }
    return out;
}

void reduced_constants(const RacahConstants& k, Rational& d, Rational& e1, Rational& e2) {
    const Rational &a1 = k.a1, &a2 = k.a2, &b = k.b, &c1 = k.c1, &c2 = k.c2, &d1 = k.d1, &d2 = k.d2;
    d = (a2 * a1 * b - a1 * a1 * c2 - a2 * a2 * c1) / (a1 * a1 * a2 * a2);
    e1 = (-2 * a1 * c1 * b + a2 * c1 * c1 + 4 * a1 * a1 * d1) / (4 * a1.pow(4) * a2);
    e2 = (-2 * a2 * b * c2 + a1 * c2 * c2 + 4 * a2 * a2 * d2) / (4 * a1 * a2.pow(4));
}

ReducedRacah to_reduced(const RacahRealization& real, const RacahConstants& k) {
    if (k.a1.is_zero() || k.a2.is_zero()) throw PreconditionError("reduced form needs a1 != 0 and a2 != 0");
    ReducedRacah out;
    out.report = CheckReport("racah");
    out.constants = k;
    const std::size_t n = real.X.dim();
    out.R1 = (real.Y + Matrix::scalar(n, k.c2 / (2 * k.a2))) * (Rational(1) / k.a2);
    out.R2 = (real.X + Matrix::scalar(n, k.c1 / (2 * k.a1))) * (Rational(1) / k.a1);
    out.R3 = real.K3 * (Rational(1) / (k.a1 * k.a2));
    reduced_constants(k, out.d, out.e1, out.e2);

    CheckReport& rep = out.report;
    const char* anchor = "redRacah";
    expect_zero(rep, "reduced_affine_round_trip", "to-red-racah", Category::structural,
                out.R1 * k.a2 - Matrix::scalar(n, k.c2 / (2 * k.a2)) - real.Y);

    const relalg::Presentation pres = relalg::fixture("reduced_racah");
    relalg::Assignment asg;
    asg.set("R1", out.R1).set("R2", out.R2).set("R3", out.R3);
    relalg::Assignment with_formula = asg;
    with_formula.set("d", out.d).set("e1", out.e1).set("e2", out.e2);
    for (std::size_t r = 0; r < pres.relations.size(); ++r)
        expect_zero(rep, "reduced_relation_" + std::to_string(r + 1), anchor, Category::oracle,
                    relalg::evaluate(pres.relations[r], with_formula));

    asg.set_unknown("d").set_unknown("e1").set_unknown("e2");
    const relalg::FitResult fit = relalg::fit_constants(pres, asg);
    CheckEntry& fe = rep.add("reduced_fit_unique", anchor, Category::oracle, fit.kind == SolveKind::unique);
    fe.fitted_constants = fit.named_values();
    if (fit.kind == SolveKind::unique) {
        expect_equal(rep, "reduced_d_formula", "to-red-racah", Category::paper_claim, *fit.value("d"), out.d, "fitted", "formula");
        expect_equal(rep, "reduced_e1_formula", "to-red-racah", Category::paper_claim, *fit.value("e1"), out.e1, "fitted", "formula");
        expect_equal(rep, "reduced_e2_formula", "to-red-racah", Category::paper_claim, *fit.value("e2"), out.e2, "fitted", "formula");
    }
    return out;
}

ReducedRacah to_reduced(const RacahRealization& real) {
    const auto fitted = fit_racah_constants(real);
    if (!fitted) throw PreconditionError("Racah constants are not determined on this realization");
    return to_reduced(real, *fitted);
}

EquitableRacah to_equitable(const ReducedRacah& red, const RacahRealization& real) {
    EquitableRacah out;
    out.report = CheckReport("racah");
    const std::size_t n = red.R1.dim();
    const Rational two(2);
    out.V1 = red.R1 * Rational(-2);
    out.V2 = red.R2 * Rational(-2);
    out.V3 = (red.R1 + red.R2 + Matrix::scalar(n, red.d)) * two;
    out.P = red.R3 * two;

    CheckReport& rep = out.report;
    const relalg::Presentation pres = relalg::fixture("equitable_racah");
    relalg::Assignment asg;
    asg.set("V1", out.V1).set("V2", out.V2).set("V3", out.V3).set("P", out.P);
    asg.set("d", red.d).set("e1", red.e1).set("e2", red.e2);
    const char* names[] = {"equitable_sum", "equitable_commutator_12", "equitable_commutator_23",
                           "equitable_commutator_31", "equitable_relation_1", "equitable_relation_2",
                           "equitable_relation_3"};
    for (std::size_t r = 0; r < pres.relations.size(); ++r)
        expect_zero(rep, names[r], r < 4 ? "eq-racah-1" : "eq-racah-2", r == 0 ? Category::structural : Category::oracle,
                    relalg::evaluate(pres.relations[r], asg));

    const RacahConstants& k = red.constants;
    const Matrix chiK1 = out.V1 * (-k.a2 / 2) - Matrix::scalar(n, k.c2 / (2 * k.a2));
    const Matrix chiK2 = out.V2 * (-k.a1 / 2) - Matrix::scalar(n, k.c1 / (2 * k.a1));
    const Matrix chiK3 = out.P * (k.a1 * k.a2 / 2);
    expect_zero(rep, "chi_K1", "to-eq-racah", Category::oracle, chiK1 - real.Y);
    expect_zero(rep, "chi_K2", "to-eq-racah", Category::oracle, chiK2 - real.X);
    expect_zero(rep, "chi_K3", "to-eq-racah", Category::oracle, chiK3 - real.K3);
    return out;
}

CheckEntry verify_racah_spectrum(const RacahRealization& real, CheckReport& rep) {
    const auto ev = real.params.eigenvalues();
    const std::set<Rational> distinct(ev.begin(), ev.end());
    if (distinct.size() != ev.size()) throw PreconditionError("eigenvalues n(n+alpha+beta+1) are not distinct");
    const Polynomial got = char_poly(real.Y);
    const Polynomial want = Polynomial::from_roots(ev);
    CheckEntry& e = rep.add("spectrum", "racah eigenvalues", Category::oracle, got == want);
    e.witness = {{"char_poly", got.str()}, {"expected", want.str()}};
    return e;
}

CheckReport racah_suite(const RacahParams& p) {
    const RacahRealization real = racah_realization(p);
    CheckReport rep = verify_racah(real);
    rep.append(casimir_racah(real).report);
    verify_racah_spectrum(real, rep);
    const auto fitted = fit_racah_constants(real);
    if (fitted && !fitted->a1.is_zero() && !fitted->a2.is_zero()) {
        const ReducedRacah red = to_reduced(real, *fitted);
        rep.append(red.report);
        rep.append(to_equitable(red, real).report);
    } else {
        rep.skip("reduced_fit_unique", "redRacah", Category::oracle, "Racah constants not determined");
    }
    return rep;
}

}  // namespace heunalg
