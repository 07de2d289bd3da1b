#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunalg/rational.hpp"

namespace heunalg {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense square matrix over the rationals, stored row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim);

    static Matrix identity(std::size_t dim);
    static Matrix scalar(std::size_t dim, const Rational& value);
    static Matrix diagonal(std::span<const Rational> entries);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    [[nodiscard]] std::size_t dim() const { return dim_; }

    Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    [[nodiscard]] bool is_zero() const;
    /// The common diagonal value when the matrix is a multiple of the identity.
    [[nodiscard]] std::optional<Rational> scalar_value() const;
    /// First (row, col) whose entry is nonzero, in row-major order.
    [[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

    [[nodiscard]] Rational trace() const;
    [[nodiscard]] Matrix pow(unsigned exponent) const;
    [[nodiscard]] std::vector<Rational> apply(std::span<const Rational> vec) const;

    /// One line per row, entries as rational text separated by commas.
    [[nodiscard]] std::string to_csv() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> entries_;
};

void require_same_dim(const Matrix& a, const Matrix& b, const char* what);

/// ab - ba
Matrix commutator(const Matrix& a, const Matrix& b);
/// ab + ba
Matrix anticommutator(const Matrix& a, const Matrix& b);

}  // namespace heunalg
