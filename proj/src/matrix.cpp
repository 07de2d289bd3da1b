#include "heunalg/matrix.hpp"

#include <sstream>

namespace heunalg {

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

Matrix Matrix::identity(std::size_t dim) { return scalar(dim, Rational(1)); }

Matrix Matrix::scalar(std::size_t dim, const Rational& value) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = value;
    return m;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
    Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool Matrix::is_zero() const { return !first_nonzero().has_value(); }

std::optional<Rational> Matrix::scalar_value() const {
    if (dim_ == 0) return std::nullopt;
    const Rational& d = (*this)(0, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const Rational& e = (*this)(i, j);
            if (i == j ? e != d : !e.is_zero()) return std::nullopt;
        }
    }
    return d;
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_nonzero() const {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!entries_[k].is_zero()) return std::make_pair(k / dim_, k % dim_);
    }
    return std::nullopt;
}

Rational Matrix::trace() const {
    Rational t;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::pow(unsigned exponent) const {
    Matrix result = identity(dim_);
    for (unsigned k = 0; k < exponent; ++k) result = result * *this;
    return result;
}

std::vector<Rational> Matrix::apply(std::span<const Rational> vec) const {
    if (vec.size() != dim_) {
        throw DimensionError("cannot apply " + std::to_string(dim_) + "x" + std::to_string(dim_) +
                             " matrix to vector of length " + std::to_string(vec.size()));
    }
    std::vector<Rational> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * vec[j];
        }
    }
    return out;
}

std::string Matrix::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j).str();
        }
        os << '\n';
    }
    return os.str();
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_dim(*this, rhs, "matrix sum");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_dim(*this, rhs, "matrix difference");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "matrix product");
    const std::size_t n = a.dim();
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "anticommutator");
    return a * b + b * a;
}

}  // namespace heunalg
