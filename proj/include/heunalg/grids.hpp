#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunalg/matrix.hpp"
#include "heunalg/rational.hpp"

namespace heunalg {

/// Construction or closure failure; `index` is the offending grid index when there is one.
class GridError : public std::invalid_argument {
public:
    explicit GridError(const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::invalid_argument(what), index_(index) {}
    [[nodiscard]] std::optional<std::size_t> index() const { return index_; }

private:
    std::optional<std::size_t> index_;
};

/// lambda(x) = x(x+gamma+delta+1), theta(x) = 2x+gamma+delta for x = 0..N.
struct RacahGrid {
    int N = 0;
    Rational gamma;
    Rational delta;
    std::vector<Rational> lambda;
    std::vector<Rational> theta;

    [[nodiscard]] std::size_t size() const { return lambda.size(); }
};

/// Rejects duplicate lambda values and any zero theta, theta+1, theta+2.
RacahGrid racah_grid(const Rational& gamma, const Rational& delta, int N);

enum class BICase { odd_rho, odd_r, even };
/// Sign convention for the N-even truncation: sum is 2(r_i + rho_j) = N+1, difference is 2(r_i - rho_j) = N+1.
enum class Pairing { sum, difference };

struct BICaseSpec {
    BICase kind = BICase::odd_rho;
    int i = 1;
    int j = 1;
    int anchor = 1;  // which rho sets the N-even grid
    Pairing pairing = Pairing::difference;

    [[nodiscard]] std::string str() const;
};

/// Finite Bannai-Ito grid with the index maps of R1 f(x) = f(-x) and R2 f(x) = f(-x-1).
struct BIGrid {
    int N = 0;
    Rational rho1, rho2, r1, r2;
    BICaseSpec spec;
    std::vector<Rational> x;
    std::vector<std::optional<std::size_t>> r1_map;
    std::vector<std::optional<std::size_t>> r2_map;

    [[nodiscard]] std::size_t size() const { return x.size(); }
    [[nodiscard]] const Rational& rho(int k) const { return k == 1 ? rho1 : rho2; }
    [[nodiscard]] const Rational& r(int k) const { return k == 1 ? r1 : r2; }
};

/// Grid points per case:
///   odd_rho: (-1)^s (s/2 + rho2 + 1/4) - 1/4, needs 2(rho1+rho2) = -N-1;
///   odd_r:   (-1)^s (r1 - s/2 - 1/4) - 1/4,   needs 2(r1+r2) = N+1;
///   even:    (-1)^s (s/2 + rho_anchor + 1/4) - 1/4, needs the pairing identity for (i, j).
/// Rejects a violated identity, duplicate points, and the points 0 and -1/2.
BIGrid bi_grid(const Rational& rho1, const Rational& rho2, const Rational& r1, const Rational& r2, int N,
               const BICaseSpec& spec);

/// Holds the truncation identity of the case.
bool truncation_holds(const Rational& rho1, const Rational& rho2, const Rational& r1, const Rational& r2, int N,
                      const BICaseSpec& spec);

/// Indices whose reflection image leaves the grid.
std::vector<std::size_t> unpaired(const std::vector<std::optional<std::size_t>>& map);

struct GridOperator {
    Matrix matrix;
    std::string provenance;
};

/// B(x) Delta - D(x) Nabla on (f(x_0), ..., f(x_N)); needs B(N) = 0 and D(0) = 0.
GridOperator build_difference_operator(std::span<const Rational> B, std::span<const Rational> D, std::size_t size,
                                       std::string provenance = "difference");
inline GridOperator build_difference_operator(std::span<const Rational> B, std::span<const Rational> D,
                                              const RacahGrid& grid, std::string provenance = "difference") {
    return build_difference_operator(B, D, grid.size(), std::move(provenance));
}

/// Three-point stencil: `up` at column x+1, `down` at x-1, `diag` on the diagonal.
GridOperator build_shift_operator(std::span<const Rational> up, std::span<const Rational> down,
                                  std::span<const Rational> diag, std::string provenance = "shift");

/// A1(x) R1 + A2(x) R2 + A0(x) I; a coefficient must vanish wherever its reflection leaves the grid.
GridOperator build_reflection_operator(std::span<const Rational> a1, std::span<const Rational> a2,
                                       std::span<const Rational> a0, const BIGrid& grid,
                                       std::string provenance = "reflection");

/// Newton form of the interpolant of values on coords.
struct GridDegree {
    std::optional<std::size_t> degree;  // empty for the zero function
    std::vector<Rational> newton;       // divided differences f[x0], f[x0,x1], ...

    [[nodiscard]] bool is_zero() const { return !degree.has_value(); }
    /// Coefficient of the top power; zero for the zero function.
    [[nodiscard]] Rational leading() const { return degree ? newton[*degree] : Rational(0); }
};

GridDegree degree_on_grid(std::span<const Rational> values, std::span<const Rational> coords);

/// "index,coordinate" lines.
std::string grid_csv(std::span<const Rational> coords);

}  // namespace heunalg
