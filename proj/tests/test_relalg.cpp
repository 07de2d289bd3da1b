#include <doctest.h>

#include "heunalg/relalg/evaluate.hpp"
#include "heunalg/relalg/fixtures.hpp"
#include "heunalg/relalg/parser.hpp"
#include "support.hpp"

using namespace heunalg;
using namespace heunalg::relalg;

namespace {

Matrix toy_X() { return Matrix::diagonal(std::vector<Rational>{1, 2}); }
Matrix toy_W() { return Matrix::from_rows({{0, 1}, {1, 0}}); }

// Test-only presentations.
constexpr const char* kToy = "gens X W Z; scalars x0 x4;\n[W,X] = Z;\n[X,Z] = x0 + x4*W;\n";
constexpr const char* kInconsistent = "gens A B; scalars s;\nA = s*B;\n";
constexpr const char* kUnderdetermined = "gens A; scalars s t;\nA = s + t;\n";
constexpr const char* kNonlinear = "gens A; scalars s t;\nA = s*t*A;\n";

Assignment toy_assignment() {
    Assignment a;
    a.set("X", toy_X()).set("W", toy_W()).set("Z", commutator(toy_W(), toy_X()));
    return a;
}

SourcePos error_pos(std::string_view src) {
    try {
        parse(src);
    } catch (const ParseError& e) {
        return e.pos();
    }
    FAIL("expected ParseError for: " << src);
    return {};
}

}  // namespace

TEST_CASE("parse examples") {
    const Presentation p = parse("gens K1 K2 K3; scalars ; [K1,K2] = K3");
    CHECK(p.generators == std::vector<std::string>{"K1", "K2", "K3"});
    CHECK(p.relations.size() == 1);

    const Presentation bi = parse("gens B1 B2 B3; scalars w1; {B1,B2} = B3 + w1");
    REQUIRE(bi.scalars.size() == 1);
    CHECK(bi.scalars[0].name == "w1");
    CHECK(bi.relations.size() == 1);
    CHECK(bi.relations[0].lhs.kind == NodeKind::anticommutator);
}

TEST_CASE("central declarations are flagged") {
    const Presentation p = fixture("racah");
    int central = 0;
    for (const auto& s : p.scalars) central += s.central ? 1 : 0;
    CHECK(central == 3);
    CHECK(p.is_scalar("b"));
    CHECK(p.is_generator("K3"));
}

TEST_CASE("malformed input gives positioned errors") {
    CHECK(error_pos("gens K1 K2; [K1,K2") == SourcePos{1, 19});
    CHECK(error_pos("gens A; A = B") == SourcePos{1, 13});
    CHECK(error_pos("gens A;\nA = 2 +;") == SourcePos{2, 8});
    CHECK(error_pos("gens A;\n  A = A^x") == SourcePos{2, 9});
    CHECK(error_pos("gens A;\nA = $") == SourcePos{2, 5});
    CHECK(error_pos("gens A A;").line == 1);
    CHECK(error_pos("gens A; scalars A;").line == 1);
    CHECK(error_pos("gens A; A = {A A}").column == 17);

    try {
        parse("gens K1 K2; [K1,K2");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("1:19:", 0) == 0);
    }
}

TEST_CASE("shipped fixtures reach a print/parse fixpoint") {
    REQUIRE(fixture_names().size() == 8);
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const Presentation p = fixture(name);
        const std::string once = print(p);
        const Presentation q = parse(once);
        CHECK(structurally_equal(p, q));
        CHECK(print(q) == once);
    }
}

TEST_CASE("random expressions reach a print/parse fixpoint") {
    const Presentation decls = parse("gens X Y Z; scalars s t; central c;");
    testing::ExprGen gen(20240611, {"X", "Y", "Z", "s", "t", "c"});
    for (int i = 0; i < 100; ++i) {
        const Node n = gen.expr(4);
        const std::string text = print(n);
        CAPTURE(text);
        const Node back = parse_expression(text, decls);
        CHECK(structurally_equal(n, back));
        CHECK(print(back) == text);
    }
}

TEST_CASE("evaluate examples") {
    Assignment a = toy_assignment();
    a.set("x0", Rational(0)).set("x4", Rational(-1));
    const Presentation toy = parse(kToy);
    CHECK(evaluate(toy.relations[0], a).is_zero());
    CHECK(evaluate(toy.relations[1], a).is_zero());

    const Presentation id = parse("gens I M; {I,M} = 2*M");
    std::mt19937_64 rng(3);
    Assignment b;
    b.set("I", Matrix::identity(3)).set("M", testing::random_matrix(rng, 3));
    CHECK(evaluate(id.relations[0], b).is_zero());
}

TEST_CASE("evaluate rejects unknown scalars and mixed dimensions") {
    const Presentation toy = parse(kToy);
    Assignment a = toy_assignment();
    a.set_unknown("x0").set("x4", Rational(1));
    CHECK_THROWS_AS(evaluate(toy.relations[1], a), EvalError);

    Assignment b;
    b.set("A", Matrix::identity(2)).set("B", Matrix::identity(3)).set("s", Rational(1));
    CHECK_THROWS(b.validate(parse(kInconsistent)));
}

TEST_CASE("evaluate is affine in a scalar symbol") {
    const Presentation p = fixture("racah");
    std::mt19937_64 rng(4);
    Assignment a;
    for (const auto& g : p.generators) a.set(g, testing::random_matrix(rng, 3));
    for (const auto& s : p.scalars) a.set(s.name, testing::random_rational(rng));
    for (std::size_t r = 1; r < p.relations.size(); ++r) {
        auto at = [&](const Rational& v) {
            Assignment c = a;
            c.set("b", v);
            return evaluate(p.relations[r], c);
        };
        const Matrix f0 = at(0), f1 = at(1), f5 = at(5);
        CHECK(f5 - f0 == (f1 - f0) * Rational(5));
    }
}

TEST_CASE("fit_constants solves the 2x2 toy system") {
    const Presentation toy = parse(kToy);
    Assignment a = toy_assignment();
    a.set_unknown("x0").set_unknown("x4");
    const FitResult fit = fit_constants(toy, a);
    REQUIRE(fit.kind == SolveKind::unique);
    CHECK(fit.value("x0") == Rational(0));
    CHECK(fit.value("x4") == Rational(-1));
    for (bool z : fit.residual_zero) CHECK(z);
    const Assignment solved = substitute(a, fit);
    for (const auto& rel : toy.relations) CHECK(evaluate(rel, solved).is_zero());
}

TEST_CASE("fit_constants reports an inconsistent system with a witness") {
    const Presentation p = parse(kInconsistent);
    Assignment a;
    a.set("A", Matrix::diagonal(std::vector<Rational>{1, 2})).set("B", Matrix::identity(2)).set_unknown("s");
    const FitResult fit = fit_constants(p, a);
    CHECK(fit.kind == SolveKind::inconsistent);
    CHECK(!fit.solved());
    CHECK(!fit.witness_value.is_zero());
    CHECK(fit.witness_relation == 0);
}

TEST_CASE("fit_constants lists free directions") {
    const Presentation p = parse(kUnderdetermined);
    Assignment a;
    a.set("A", Matrix::scalar(2, 3)).set_unknown("s").set_unknown("t");
    const FitResult fit = fit_constants(p, a);
    REQUIRE(fit.kind == SolveKind::underdetermined);
    REQUIRE(fit.free_directions.size() == 1);
    const auto& d = fit.free_directions[0];
    CHECK(d[0] + d[1] == Rational(0));
    CHECK(*fit.value("s") + *fit.value("t") == Rational(3));
    CHECK(fit.free_direction_text().size() == 1);
}

TEST_CASE("fit_constants rejects products of unknowns") {
    const Presentation p = parse(kNonlinear);
    Assignment a;
    a.set("A", Matrix::identity(2)).set_unknown("s").set_unknown("t");
    try {
        fit_constants(p, a);
        FAIL("expected NonlinearityError");
    } catch (const NonlinearityError& e) {
        CHECK(e.relation() == 0);
    }
}

TEST_CASE("central unknowns expand over a basis") {
    const Presentation p = parse("gens A G; scalars ; central e;\nA = e;\n");
    const Matrix G = Matrix::diagonal(std::vector<Rational>{1, -1});
    Assignment a;
    a.set("A", Matrix::diagonal(std::vector<Rational>{5, 1})).set("G", G);
    a.set_central("e", {{"1", Matrix::identity(2)}, {"G", G}});
    const FitResult fit = fit_constants(p, a);
    REQUIRE(fit.kind == SolveKind::unique);
    CHECK(fit.value("e[1]") == Rational(3));
    CHECK(fit.value("e[G]") == Rational(2));
}

TEST_CASE("check_central examples") {
    std::mt19937_64 rng(5);
    const Matrix A = testing::random_matrix(rng, 3);
    const Matrix B = testing::random_matrix(rng, 3);
    const std::vector<std::pair<std::string, Matrix>> gens{{"A", A}, {"B", B}};
    CHECK(check_central(Matrix::identity(3), gens).passed());
    CHECK(check_central(Matrix::scalar(3, Rational(-7, 2)), gens).passed());
    const CheckEntry e = check_central(A, gens);
    CHECK(!e.passed());
    CHECK(!e.witness.empty());
}
