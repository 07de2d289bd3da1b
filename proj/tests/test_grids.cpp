#include <doctest.h>

#include "heunalg/grids.hpp"
#include "support.hpp"

using namespace heunalg;

namespace {

std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }

std::optional<std::size_t> find_point(const std::vector<Rational>& x, const Rational& target) {
    for (std::size_t t = 0; t < x.size(); ++t)
        if (x[t] == target) return t;
    return std::nullopt;
}

BICaseSpec spec_of(BICase k) {
    BICaseSpec s;
    s.kind = k;
    return s;
}

}  // namespace

TEST_CASE("racah_grid examples") {
    const RacahGrid g = racah_grid(Rational(1, 2), Rational(1, 3), 2);
    CHECK(g.lambda == R({0, Rational(17, 6), Rational(23, 3)}));
    CHECK(g.theta == R({Rational(5, 6), Rational(17, 6), Rational(29, 6)}));
    try {
        racah_grid(0, 0, 2);
        FAIL("theta(0) = 0 must be rejected");
    } catch (const GridError& e) {
        CHECK(e.index() == 0u);
        CHECK(std::string(e.what()).find("theta(0)") != std::string::npos);
    }
}

TEST_CASE("racah_grid matches lambda(x) = x(x+gamma+delta+1)") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational g = testing::random_rational(rng), d = testing::random_rational(rng);
        const int N = 2 + trial % 5;
        RacahGrid grid;
        try {
            grid = racah_grid(g, d, N);
        } catch (const GridError&) {
            continue;
        }
        for (int x = 0; x <= N; ++x) {
            const Rational rx(x);
            CHECK(grid.lambda[static_cast<std::size_t>(x)] == rx * rx + rx * (g + d + 1));
        }
    }
}

TEST_CASE("racah_grid rejects colliding lambda") {
    // lambda(x) = x(x - 2) collides at x = 0 and x = 2
    CHECK_THROWS_AS(racah_grid(Rational(-3, 2), Rational(-3, 2), 2), GridError);
}

TEST_CASE("bi_grid N-even example") {
    BICaseSpec spec{BICase::even, 1, 1, 1, Pairing::difference};
    const Rational rho1(1, 4), r1(7, 4);
    const BIGrid g = bi_grid(rho1, Rational(2, 5), r1, Rational(1, 7), 2, spec);
    CHECK(g.x == R({Rational(1, 4), Rational(-5, 4), Rational(5, 4)}));
}

TEST_CASE("bi_grid odd-rho example and reflection maps") {
    const Rational rho2(1, 3), rho1(-4, 3);
    const BIGrid g = bi_grid(rho1, rho2, Rational(1, 5), Rational(1, 7), 1, spec_of(BICase::odd_rho));
    CHECK(g.x == R({Rational(1, 3), Rational(-4, 3)}));
    CHECK(g.x[1] == rho1);
    for (std::size_t s : unpaired(g.r1_map)) CHECK(((g.x[s] - rho1) * (g.x[s] - rho2)).is_zero());
}

TEST_CASE("reflection maps agree with an exhaustive search") {
    const BIGrid g = bi_grid(Rational(-10, 3), Rational(1, 3), Rational(1, 5), Rational(2, 7), 5,
                             spec_of(BICase::odd_rho));
    for (std::size_t s = 0; s < g.size(); ++s) {
        CHECK(g.r1_map[s] == find_point(g.x, -g.x[s]));
        CHECK(g.r2_map[s] == find_point(g.x, -g.x[s] - 1));
    }
}

TEST_CASE("bi_grid guards") {
    CHECK_THROWS_AS(bi_grid(0, 0, Rational(1, 5), Rational(1, 5), 3, spec_of(BICase::odd_r)), GridError);
    CHECK_THROWS_AS(bi_grid(Rational(-1), Rational(1, 3), 0, 0, 3, spec_of(BICase::odd_rho)), GridError);
    // x_0 = rho2 = 0
    CHECK_THROWS_AS(bi_grid(Rational(-2), 0, 0, 0, 3, spec_of(BICase::odd_rho)), GridError);
}

TEST_CASE("difference operator examples") {
    const std::vector<Rational> zero(4);
    CHECK(build_difference_operator(zero, zero, 4).matrix.is_zero());

    const std::vector<Rational> B{1, 2, 3, 0}, D{0, 5, 6, 7};
    const Matrix M = build_difference_operator(B, D, 4).matrix;
    CHECK(M(1, 2) == Rational(2));
    CHECK(M(1, 0) == Rational(5));
    CHECK(M(1, 1) == Rational(-7));
    const std::vector<Rational> ones(4, Rational(1));
    for (const Rational& v : M.apply(ones)) CHECK(v.is_zero());

    const std::vector<Rational> bad{1, 2, 3, 4};
    try {
        build_difference_operator(bad, D, 4);
        FAIL("expected closure error");
    } catch (const GridError& e) {
        CHECK(e.index() == 3u);
    }
}

TEST_CASE("reflection operator examples") {
    const BIGrid g = bi_grid(Rational(1, 3), Rational(2, 9), Rational(1, 5), Rational(9, 5), 3, spec_of(BICase::odd_r));
    const std::size_t n = g.size();
    const std::vector<Rational> zero(n), ones(n, Rational(1));
    CHECK(build_reflection_operator(zero, zero, ones, g).matrix == Matrix::identity(n));

    std::vector<Rational> a2(n);
    const Rational half(1, 2);
    for (std::size_t s = 0; s < n; ++s) a2[s] = (g.x[s] - g.r1 + half) * (g.x[s] - g.r2 + half);
    const Matrix M = build_reflection_operator(zero, a2, zero, g).matrix;
    Matrix oracle(n);
    for (std::size_t s = 0; s < n; ++s)
        if (auto t = find_point(g.x, -g.x[s] - 1)) oracle(s, *t) = a2[s];
    CHECK(M == oracle);

    // R1 pairs every point of this grid; on an odd-rho grid x_0 = rho2 has no mirror
    for (std::size_t s = 0; s < n; ++s) CHECK(find_point(g.x, -g.x[s]).has_value());
    const BIGrid h = bi_grid(Rational(-7, 3), Rational(1, 3), Rational(1, 5), Rational(2, 7), 3,
                             spec_of(BICase::odd_rho));
    REQUIRE(!find_point(h.x, -h.x[0]));
    std::vector<Rational> a1(h.size());
    a1[0] = 1;
    const std::vector<Rational> hz(h.size());
    try {
        build_reflection_operator(a1, hz, hz, h);
        FAIL("expected closure error");
    } catch (const GridError& e) {
        CHECK(e.index() == 0u);
    }
}

TEST_CASE("degree_on_grid examples") {
    const std::vector<Rational> coords{0, 2, 6};
    CHECK(degree_on_grid(R({3, 3, 3}), coords).degree == 0u);
    const GridDegree sq = degree_on_grid(R({0, 4, 36}), coords);
    CHECK(sq.degree == 2u);
    CHECK(sq.leading() == Rational(1));
    const GridDegree z = degree_on_grid(R({0, 0, 0}), coords);
    CHECK(z.is_zero());
    CHECK(z.leading() == Rational(0));
}

TEST_CASE("degree_on_grid recovers random polynomials") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t deg = static_cast<std::size_t>(trial % 5);
        std::vector<Rational> c(deg + 1);
        for (auto& v : c) v = testing::random_rational(rng);
        if (c.back().is_zero()) c.back() = 1;
        std::vector<Rational> coords, values;
        for (int k = 0; k < 7; ++k) {
            const Rational x = Rational(k * k, 3) - Rational(k, 2);
            coords.push_back(x);
            Rational v, p(1);
            for (const Rational& ck : c) {
                v += ck * p;
                p *= x;
            }
            values.push_back(v);
        }
        const GridDegree d = degree_on_grid(values, coords);
        CHECK(d.degree == deg);
        CHECK(d.leading() == c.back());
    }
}
