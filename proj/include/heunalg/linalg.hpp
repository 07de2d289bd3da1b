#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "heunalg/matrix.hpp"
#include "heunalg/rational.hpp"

namespace heunalg {

/// Univariate polynomial; coeffs[k] multiplies t^k. Trailing zeros are trimmed.
struct Polynomial {
    std::vector<Rational> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> c);

    /// prod (t - r) over the given roots.
    static Polynomial from_roots(std::span<const Rational> roots);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    [[nodiscard]] Rational operator()(const Rational& t) const;
    [[nodiscard]] std::string str(const std::string& var = "t") const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Characteristic polynomial det(tI - a) by the Faddeev-LeVerrier recursion. Monic of degree dim.
Polynomial char_poly(const Matrix& a);

/// Dense rectangular matrix used for linear systems.
class RectMatrix {
public:
    RectMatrix() = default;
    RectMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    explicit RectMatrix(const Matrix& square);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] std::vector<Rational> apply(std::span<const Rational> x) const;
    /// y^T A
    [[nodiscard]] std::vector<Rational> left_apply(std::span<const Rational> y) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

enum class SolveKind { unique, underdetermined, inconsistent };

/// Outcome of an exact linear solve.
///
/// unique / underdetermined: `particular` solves the system (free variables set to 0);
/// `null_basis` spans the homogeneous solutions (empty when unique).
/// inconsistent: `certificate` is a vector y with y^T A = 0 and y^T b = `certificate_value` != 0.
struct SolveResult {
    SolveKind kind = SolveKind::unique;
    std::size_t rank = 0;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> null_basis;
    std::vector<Rational> certificate;
    Rational certificate_value;
};

/// Gauss-Jordan elimination with full pivoting over the rationals.
SolveResult solve_exact(const RectMatrix& a, std::span<const Rational> rhs);
SolveResult solve_exact(const Matrix& a, std::span<const Rational> rhs);

/// Rank by the same elimination.
std::size_t rank(const RectMatrix& a);

}  // namespace heunalg
