#include "heunalg/grids.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace heunalg {

RacahGrid racah_grid(const Rational& gamma, const Rational& delta, int N) {
    if (N < 0) throw GridError("N must be nonnegative");
    RacahGrid g;
    g.N = N;
    g.gamma = gamma;
    g.delta = delta;
    for (int x = 0; x <= N; ++x) {
        const Rational rx(x);
        g.lambda.push_back(rx * (rx + gamma + delta + 1));
        g.theta.push_back(2 * rx + gamma + delta);
    }
    for (std::size_t x = 0; x < g.size(); ++x) {
        for (int k = 0; k <= 2; ++k)
            if ((g.theta[x] + k).is_zero())
                throw GridError("theta(" + std::to_string(x) + ")" + (k ? "+" + std::to_string(k) : "") +
                                    " vanishes",
                                x);
        for (std::size_t y = 0; y < x; ++y)
            if (g.lambda[x] == g.lambda[y])
                throw GridError("lambda(" + std::to_string(y) + ") = lambda(" + std::to_string(x) + ") = " +
                                    g.lambda[x].str(),
                                x);
    }
    return g;
}

std::string BICaseSpec::str() const {
    switch (kind) {
        case BICase::odd_rho: return "odd_rho";
        case BICase::odd_r: return "odd_r";
        case BICase::even:
            return "even(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",anchor=" + std::to_string(anchor) +
                   "," + (pairing == Pairing::sum ? "sum" : "difference") + ")";
    }
    return "?";
}

bool truncation_holds(const Rational& rho1, const Rational& rho2, const Rational& r1, const Rational& r2, int N,
                      const BICaseSpec& spec) {
    switch (spec.kind) {
        case BICase::odd_rho: return N % 2 == 1 && 2 * (rho1 + rho2) == Rational(-N - 1);
        case BICase::odd_r: return N % 2 == 1 && 2 * (r1 + r2) == Rational(N + 1);
        case BICase::even: {
            const Rational& ri = spec.i == 1 ? r1 : r2;
            const Rational& rj = spec.j == 1 ? rho1 : rho2;
            const Rational lhs = spec.pairing == Pairing::sum ? 2 * (ri + rj) : 2 * (ri - rj);
            return N % 2 == 0 && lhs == Rational(N + 1);
        }
    }
    return false;
}

namespace {

std::vector<std::optional<std::size_t>> reflection_map(const std::vector<Rational>& x, const Rational& shift) {
    std::vector<std::optional<std::size_t>> map(x.size());
    for (std::size_t s = 0; s < x.size(); ++s) {
        const Rational target = -x[s] - shift;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (x[t] == target) map[s] = t;
    }
    return map;
}

}  // namespace

std::vector<std::size_t> unpaired(const std::vector<std::optional<std::size_t>>& map) {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < map.size(); ++s)
        if (!map[s]) out.push_back(s);
    return out;
}

BIGrid bi_grid(const Rational& rho1, const Rational& rho2, const Rational& r1, const Rational& r2, int N,
               const BICaseSpec& spec) {
    if (N < 0) throw GridError("N must be nonnegative");
    if ((spec.i != 1 && spec.i != 2) || (spec.j != 1 && spec.j != 2) || (spec.anchor != 1 && spec.anchor != 2))
        throw GridError("case indices must be 1 or 2");
    if (!truncation_holds(rho1, rho2, r1, r2, N, spec))
        throw GridError("truncation identity of case " + spec.str() + " fails for N=" + std::to_string(N));
    BIGrid g;
    g.N = N;
    g.rho1 = rho1;
    g.rho2 = rho2;
    g.r1 = r1;
    g.r2 = r2;
    g.spec = spec;
    const Rational quarter(1, 4);
    for (int s = 0; s <= N; ++s) {
        const Rational half_s(s, 2);
        Rational inner;
        switch (spec.kind) {
            case BICase::odd_rho: inner = half_s + rho2 + quarter; break;
            case BICase::odd_r: inner = r1 - half_s - quarter; break;
            case BICase::even: inner = half_s + g.rho(spec.anchor) + quarter; break;
        }
        g.x.push_back((s % 2 == 0 ? inner : -inner) - quarter);
    }
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (g.x[s].is_zero()) throw GridError("grid point x_" + std::to_string(s) + " is 0", s);
        if (g.x[s] == Rational(-1, 2)) throw GridError("grid point x_" + std::to_string(s) + " is -1/2", s);
        for (std::size_t t = 0; t < s; ++t)
            if (g.x[s] == g.x[t])
                throw GridError("grid points x_" + std::to_string(t) + " and x_" + std::to_string(s) + " coincide", s);
    }
    g.r1_map = reflection_map(g.x, Rational(0));
    g.r2_map = reflection_map(g.x, Rational(1));
    for (const auto* map : {&g.r1_map, &g.r2_map})
        for (std::size_t s = 0; s < g.size(); ++s)
            if ((*map)[s] && (*map)[*(*map)[s]] != s) throw GridError("reflection map is not an involution", s);

    const Rational half(1, 2);
    if (spec.kind == BICase::odd_rho) {
        for (std::size_t s : unpaired(g.r1_map))
            if (!((g.x[s] - rho1) * (g.x[s] - rho2)).is_zero())
                throw GridError("(x-rho1)(x-rho2) does not vanish at unpaired R1 point x_" + std::to_string(s), s);
    } else if (spec.kind == BICase::odd_r) {
        for (std::size_t s : unpaired(g.r2_map))
            if (!((g.x[s] - r1 + half) * (g.x[s] - r2 + half)).is_zero())
                throw GridError("(x-r1+1/2)(x-r2+1/2) does not vanish at unpaired R2 point x_" + std::to_string(s), s);
    }
    return g;
}

namespace {

void require_size(std::span<const Rational> v, std::size_t n, const char* what) {
    if (v.size() != n)
        throw DimensionError(std::string(what) + " has " + std::to_string(v.size()) + " values, expected " +
                             std::to_string(n));
}

}  // namespace

GridOperator build_difference_operator(std::span<const Rational> B, std::span<const Rational> D, std::size_t size,
                                       std::string provenance) {
    require_size(B, size, "B");
    require_size(D, size, "D");
    std::vector<Rational> diag(size);
    for (std::size_t x = 0; x < size; ++x) diag[x] = -B[x] - D[x];
    return build_shift_operator(B, D, diag, std::move(provenance));
}

GridOperator build_shift_operator(std::span<const Rational> up, std::span<const Rational> down,
                                  std::span<const Rational> diag, std::string provenance) {
    const std::size_t n = diag.size();
    require_size(up, n, "forward coefficient");
    require_size(down, n, "backward coefficient");
    if (n == 0) throw GridError("empty grid");
    if (!up[n - 1].is_zero())
        throw GridError("closure: forward coefficient " + up[n - 1].str() + " at row " + std::to_string(n - 1) +
                            " shifts off the grid",
                        n - 1);
    if (!down[0].is_zero())
        throw GridError("closure: backward coefficient " + down[0].str() + " at row 0 shifts off the grid", 0);
    GridOperator op{Matrix(n), std::move(provenance)};
    for (std::size_t x = 0; x < n; ++x) {
        if (x + 1 < n) op.matrix(x, x + 1) = up[x];
        if (x > 0) op.matrix(x, x - 1) = down[x];
        op.matrix(x, x) = diag[x];
    }
    return op;
}

GridOperator build_reflection_operator(std::span<const Rational> a1, std::span<const Rational> a2,
                                       std::span<const Rational> a0, const BIGrid& grid, std::string provenance) {
    const std::size_t n = grid.size();
    require_size(a1, n, "R1 coefficient");
    require_size(a2, n, "R2 coefficient");
    require_size(a0, n, "identity coefficient");
    GridOperator op{Matrix(n), std::move(provenance)};
    for (std::size_t s = 0; s < n; ++s) {
        const std::pair<const std::vector<std::optional<std::size_t>>*, const Rational*> parts[] = {
            {&grid.r1_map, &a1[s]}, {&grid.r2_map, &a2[s]}};
        int which = 1;
        for (const auto& [map, c] : parts) {
            if ((*map)[s]) {
                op.matrix(s, *(*map)[s]) += *c;
            } else if (!c->is_zero()) {
                throw GridError("closure: R" + std::to_string(which) + " coefficient " + c->str() + " at row " +
                                    std::to_string(s) + " reflects x=" + grid.x[s].str() + " off the grid",
                                s);
            }
            ++which;
        }
        op.matrix(s, s) += a0[s];
    }
    return op;
}

GridDegree degree_on_grid(std::span<const Rational> values, std::span<const Rational> coords) {
    require_size(values, coords.size(), "values");
    const std::set<Rational> distinct(coords.begin(), coords.end());
    if (distinct.size() != coords.size()) throw GridError("duplicate coordinates");
    std::vector<Rational> table(values.begin(), values.end());
    GridDegree out;
    const std::size_t n = table.size();
    for (std::size_t k = 0; k < n; ++k) {
        out.newton.push_back(table[k]);
        for (std::size_t i = n; i-- > k + 1;) table[i] = (table[i] - table[i - 1]) / (coords[i] - coords[i - k - 1]);
    }
    for (std::size_t k = n; k-- > 0;) {
        if (!out.newton[k].is_zero()) {
            out.degree = k;
            break;
        }
    }
    return out;
}

std::string grid_csv(std::span<const Rational> coords) {
    std::ostringstream os;
    for (std::size_t s = 0; s < coords.size(); ++s) os << s << ',' << coords[s] << '\n';
    return os.str();
}

}  // namespace heunalg
