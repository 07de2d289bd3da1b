#include "heunalg/bannai_ito.hpp"

#include <set>

#include "heunalg/checks.hpp"
#include "heunalg/linalg.hpp"
#include "heunalg/relalg/fixtures.hpp"

namespace heunalg {

namespace {

constexpr const char* kAlg = "bi-algebra";
constexpr const char* kEmbed = "r-in-bi";

Rational sq(const Rational& a) { return a * a; }

}  // namespace

Rational BIParams::k() const { return rho1 + rho2 - r1 - r2 + Rational(1, 2); }

std::vector<Rational> BIParams::eigenvalues() const {
    std::vector<Rational> out;
    for (int n = 0; n <= N; ++n) {
        const Rational v = Rational(n) + k();
        out.push_back(n % 2 == 0 ? v : -v);
    }
    return out;
}

NamedValues BIParams::named() const {
    return {wv("rho1", rho1), wv("rho2", rho2), wv("r1", r1), wv("r2", r2), {"N", std::to_string(N)},
            {"case", spec.str()}};
}

void validate(const BIParams& p) {
    if (p.N < 1) throw PreconditionError("N must be at least 1");
    if (p.spec.kind != BICase::even && p.N % 2 == 0) throw PreconditionError("case " + p.spec.str() + " needs N odd");
    if (p.spec.kind == BICase::even && p.N % 2 != 0) throw PreconditionError("the even case needs N even");
    if (!truncation_holds(p.rho1, p.rho2, p.r1, p.r2, p.N, p.spec))
        throw PreconditionError("truncation identity of case " + p.spec.str() + " fails");
    const auto ev = p.eigenvalues();
    if (std::set<Rational>(ev.begin(), ev.end()).size() != ev.size())
        throw PreconditionError("eigenvalues (-1)^n(n+rho1+rho2-r1-r2+1/2) are not distinct");
}

BIConstants BIConstants::closed_form(const BIParams& p) {
    return {4 * (p.rho1 * p.rho2 - p.r1 * p.r2), 2 * (sq(p.rho1) + sq(p.rho2) - sq(p.r1) - sq(p.r2)),
            4 * (p.rho1 * p.rho2 + p.r1 * p.r2), 2 * (sq(p.rho1) + sq(p.rho2) + sq(p.r1) + sq(p.r2) - Rational(1, 8))};
}

NamedValues BIConstants::named() const { return {wv("w1", w1), wv("w2", w2), wv("w3", w3), wv("Q", Q)}; }

BIRealization bi_realization(const BIParams& p) {
    validate(p);
    BIRealization out;
    out.params = p;
    out.grid = bi_grid(p.rho1, p.rho2, p.r1, p.r2, p.N, p.spec);
    out.constants = BIConstants::closed_form(p);
    std::vector<Rational> c1, c2, c0;
    const Rational half(1, 2);
    for (const Rational& x : out.grid.x) {
        const Rational a = -(x - p.rho1) * (x - p.rho2) / (2 * x);
        const Rational b = (x - p.r1 + half) * (x - p.r2 + half) / (2 * x + 1);
        c1.push_back(a);
        c2.push_back(b);
        c0.push_back(-a - b);
    }
    const std::size_t n = out.grid.size();
    const Rational k = p.k();
    out.Bt1 = Matrix::diagonal(out.grid.x);
    out.Bt2 = build_reflection_operator(c1, c2, c0, out.grid, "bi-op").matrix;
    out.B1 = out.Bt1 * Rational(2) + Matrix::scalar(n, half);
    out.B2 = out.Bt2 * Rational(2) + Matrix::scalar(n, k);
    out.B3 = anticommutator(out.Bt1, out.Bt2) * Rational(4) + out.Bt2 * Rational(2) + out.Bt1 * (4 * k) +
             Matrix::scalar(n, p.rho1 + p.rho2 - 4 * p.rho1 * p.rho2 - p.r1 - p.r2 + 4 * p.r1 * p.r2 + half);
    return out;
}

std::optional<BIConstants> fit_bi_constants(const BIRealization& real) {
    relalg::Assignment asg;
    asg.set("B1", real.B1).set("B2", real.B2).set("B3", real.B3);
    for (const char* s : {"w1", "w2", "w3", "Q"}) asg.set_unknown(s);
    const relalg::FitResult fit = relalg::fit_constants(relalg::fixture("bannai_ito"), asg);
    if (fit.kind != SolveKind::unique) return std::nullopt;
    return BIConstants{*fit.value("w1"), *fit.value("w2"), *fit.value("w3"), *fit.value("Q")};
}

CheckReport verify_bi(const BIRealization& real) {
    CheckReport rep("bannai_ito");
    const BIConstants& bc = real.constants;
    rep.add("grid_closure", "bi-grid", Category::structural, true, real.grid.spec.str());

    const relalg::Presentation pres = relalg::fixture("bannai_ito");
    relalg::Assignment asg;
    asg.set("B1", real.B1).set("B2", real.B2).set("B3", real.B3);
    relalg::Assignment printed = asg;
    printed.set("w1", bc.w1).set("w2", bc.w2).set("w3", bc.w3).set("Q", bc.Q);
    const char* names[] = {"relation_1", "relation_2", "relation_3", "casimir_closed_form"};
    for (std::size_t r = 0; r < pres.relations.size(); ++r)
        expect_zero(rep, names[r], r < 3 ? kAlg : "bi-casimir", Category::paper_claim,
                    relalg::evaluate(pres.relations[r], printed));

    for (const char* s : {"w1", "w2", "w3", "Q"}) asg.set_unknown(s);
    const relalg::FitResult fit = relalg::fit_constants(pres, asg);
    CheckEntry& fe = rep.add("fit_unique", kAlg, Category::oracle, fit.kind == SolveKind::unique);
    fe.fitted_constants = fit.named_values();
    for (const auto& dir : fit.free_direction_text()) fe.witness.emplace_back("free_direction", dir);
    if (fit.kind == SolveKind::unique) {
        const std::pair<const char*, Rational> pairs[] = {{"w1", bc.w1}, {"w2", bc.w2}, {"w3", bc.w3}, {"Q", bc.Q}};
        for (const auto& [name, v] : pairs)
            expect_equal(rep, std::string("constant_") + name, "bi realization scalars", Category::paper_claim,
                         *fit.value(name), v, "fitted", "closed_form");
    }

    const Matrix Q = real.B1 * real.B1 + real.B2 * real.B2 + real.B3 * real.B3;
    expect_scalar(rep, "casimir_scalar", "bi-casimir", Category::oracle, Q);
    rep.add(relalg::check_central(Q, {{"B1", real.B1}, {"B2", real.B2}, {"B3", real.B3}}, "bannai_ito",
                                  "casimir_central", "bi-casimir"));

    const relalg::Presentation jac = relalg::fixture("bi_graded_jacobi");
    relalg::Assignment ja;
    ja.set("B1", real.B1).set("B2", real.B2).set("B3", real.B3);
    expect_zero(rep, "graded_jacobi", "bi graded Jacobi", Category::structural, relalg::evaluate(jac.relations[0], ja));
    return rep;
}

CheckReport verify_bi_spectrum(const BIRealization& real) {
    CheckReport rep("bannai_ito");
    const BIParams& p = real.params;
    const auto ev = p.eigenvalues();
    const Polynomial printed = Polynomial::from_roots(ev);
    std::vector<Rational> tilde;
    for (const Rational& e : ev) tilde.push_back((e - p.k()) / 2);
    const Polynomial shifted = Polynomial::from_roots(tilde);
    const Polynomial bt2 = char_poly(real.Bt2);
    const Polynomial b2 = char_poly(real.B2);

    CheckEntry& lit = rep.add("spectrum_btilde2", "bi-op-action", Category::paper_claim, bt2 == printed);
    lit.witness = {{"char_poly", bt2.str()}, {"expected", printed.str()}};
    CheckEntry& two = rep.add("spectrum_b2", "bi-op-action", Category::oracle, b2 == printed);
    two.witness = {{"char_poly", b2.str()}, {"expected", printed.str()}};
    CheckEntry& der = rep.add("spectrum_btilde2_shifted", "bi-op-action", Category::oracle, bt2 == shifted);
    der.witness = {{"char_poly", bt2.str()}, {"expected", shifted.str()}};
    return rep;
}

RacahInBI racah_in_bi(const BIRealization& real) {
    RacahInBI out{Matrix(), Matrix(), Matrix(), Matrix(), Matrix(), CheckReport("bannai_ito")};
    const std::size_t n = real.B1.dim();
    const Rational q(1, 4);
    const Matrix I34 = Matrix::scalar(n, Rational(3, 4));
    out.A = (real.B1 * real.B1 - real.B1 - I34) * q;
    out.B = (real.B2 * real.B2 - real.B2 - I34) * q;
    out.C = (real.B3 * real.B3 - real.B3 - I34) * q;
    out.Gamma = real.B1 + real.B2 + real.B3 - Matrix::scalar(n, Rational(3, 2));
    out.P = commutator(out.A, out.B) * Rational(1, 2);

    CheckReport& rep = out.report;
    const BIConstants& bc = real.constants;
    const relalg::Presentation pres = relalg::fixture("racah_in_bi");
    relalg::Assignment asg;
    asg.set("A", out.A).set("B", out.B).set("C", out.C).set("P", out.P).set("G", out.Gamma);
    asg.set("w1", bc.w1).set("w2", bc.w2).set("w3", bc.w3).set("Q", bc.Q);
    const std::pair<const char*, const char*> names[] = {
        {"commutator_ab", "p-def"},       {"commutator_bc", "p-def"},       {"commutator_ca", "p-def"},
        {"gamma_commutes_a", "gamma-def"}, {"gamma_commutes_b", "gamma-def"}, {"gamma_commutes_c", "gamma-def"},
        {"abc_sum", "gamma-def"},          {"r_in_bi_1", kEmbed},             {"r_in_bi_2", kEmbed},
        {"r_in_bi_3", kEmbed}};
    for (std::size_t r = 0; r < pres.relations.size(); ++r)
        expect_zero(rep, names[r].first, names[r].second, r < 3 ? Category::structural : Category::paper_claim,
                    relalg::evaluate(pres.relations[r], asg));
    expect_zero(rep, "gamma_commutes_p", "gamma-def", Category::oracle, commutator(out.Gamma, out.P));

    // d, e1, e2 fitted over span{I, Gamma} on the equitable presentation.
    const relalg::Presentation eq = relalg::fixture("equitable_racah");
    relalg::Assignment ea;
    ea.set("V1", out.A).set("V2", out.B).set("V3", out.C).set("P", out.P);
    const std::vector<std::pair<std::string, Matrix>> basis = {{"I", Matrix::identity(n)}, {"G", out.Gamma}};
    for (const char* s : {"d", "e1", "e2"}) ea.set_central(s, basis);
    const relalg::FitResult fit = relalg::fit_constants(eq, ea);
    CheckEntry& fe = rep.add("r_to_bi_fit", "r-to-bi", Category::oracle, fit.solved());
    fe.fitted_constants = fit.named_values();
    for (const auto& dir : fit.free_direction_text()) fe.witness.emplace_back("free_direction", dir);

    const Rational &w1 = bc.w1, &w2 = bc.w2, &w3 = bc.w3;
    const Rational s64(1, 64);
    relalg::FitResult printed;
    printed.kind = SolveKind::unique;
    printed.unknowns = {"d[I]", "d[G]", "e1[I]", "e1[G]", "e2[I]", "e2[G]"};
    printed.values = {(bc.Q - Rational(15, 4)) / 8,         Rational(-1, 8),
                      s64 * (w3 - w1) / 2 * (w3 + w1) / 2, -s64 * (w3 - w1) / 2,
                      s64 * (w1 - w2) / 2 * (w1 + w2) / 2, -s64 * (w1 - w2) / 2};
    relalg::FitResult derived = printed;
    derived.values[2] = -s64 * (w1 - w2) / 2 * (w1 + w2) / 2;
    derived.values[3] = s64 * (w1 - w2) / 2;
    derived.values[4] = s64 * (w3 - w1) / 2 * (w3 + w1) / 2;
    derived.values[5] = -s64 * (w3 - w1) / 2;

    const relalg::Assignment pa = relalg::substitute(ea, printed);
    const relalg::Assignment da = relalg::substitute(ea, derived);
    const char* eq_names[] = {"sum", "commutator_12", "commutator_23", "commutator_31", "relation_1", "relation_2",
                              "relation_3"};
    for (std::size_t r = 0; r < eq.relations.size(); ++r) {
        expect_zero(rep, std::string("r_to_bi_printed_") + eq_names[r], "r-to-bi", Category::paper_claim,
                    relalg::evaluate(eq.relations[r], pa));
        CheckEntry& e = expect_zero(rep, std::string("r_to_bi_swapped_") + eq_names[r], "r-to-bi", Category::oracle,
                                    relalg::evaluate(eq.relations[r], da));
        e.detail += "; e1 and e2 exchanged with a sign change on e1";
    }
    return out;
}

std::vector<BICaseSpec> even_case_specs() {
    std::vector<BICaseSpec> out;
    for (Pairing pr : {Pairing::sum, Pairing::difference})
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int a = 1; a <= 2; ++a) out.push_back({BICase::even, i, j, a, pr});
    return out;
}

BIParams even_case_params(const BIParams& base, const BICaseSpec& spec) {
    BIParams p = base;
    p.spec = spec;
    const Rational half_n(p.N + 1, 2);
    const Rational& rho = p.spec.j == 1 ? p.rho1 : p.rho2;
    Rational& r = p.spec.i == 1 ? p.r1 : p.r2;
    r = spec.pairing == Pairing::sum ? half_n - rho : half_n + rho;
    return p;
}

CheckReport bi_suite(const BIParams& p) {
    const BIRealization real = bi_realization(p);
    CheckReport rep = verify_bi(real);
    rep.append(verify_bi_spectrum(real));
    rep.append(racah_in_bi(real).report);
    return rep;
}

CheckReport bi_even_enumeration(const BIParams& base) {
    CheckReport rep("bannai_ito");
    std::vector<std::string> closing, sum_closing;
    for (const BICaseSpec& spec : even_case_specs()) {
        const BIParams p = even_case_params(base, spec);
        try {
            CheckReport sub = bi_suite(p);
            for (CheckEntry e : sub.entries()) {
                e.check = "even_" + e.check;
                e.anchor += " " + spec.str();
                rep.add(std::move(e));
            }
            closing.push_back(spec.str());
            if (spec.pairing == Pairing::sum) sum_closing.push_back(spec.str());
            rep.add("even_combination", "bi-grid", Category::oracle, true, spec.str() + " closes");
        } catch (const GridError& e) {
            rep.skip("even_combination", "bi-grid", Category::oracle, spec.str() + ": " + e.what());
        } catch (const PreconditionError& e) {
            rep.skip("even_combination", "bi-grid", Category::oracle, spec.str() + ": " + e.what());
        }
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
        return s.empty() ? std::string("none") : s;
    };
    CheckEntry& lit = rep.add("even_printed_pairing_closes", "bi-grid", Category::paper_claim, !sum_closing.empty());
    lit.witness = {{"closing", join(sum_closing)}};
    CheckEntry& any = rep.add("even_enumeration", "bi-grid", Category::oracle, !closing.empty());
    any.witness = {{"closing", join(closing)}};
    return rep;
}

}  // namespace heunalg
