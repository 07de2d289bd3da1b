#include "heunalg/linalg.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace heunalg {

Polynomial::Polynomial(std::vector<Rational> c) : coeffs(std::move(c)) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
    std::vector<Rational> c{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) os << mag;
        if (k > 0) {
            if (!unit) os << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

Polynomial char_poly(const Matrix& a) {
    const std::size_t n = a.dim();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    // M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I
    Matrix m = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const Matrix am = a * m;
        c[n - k] = -am.trace() / Rational(static_cast<long>(k));
        if (k < n) m = am + Matrix::scalar(n, c[n - k]);
    }
    return Polynomial(std::move(c));
}

RectMatrix::RectMatrix(const Matrix& square) : RectMatrix(square.dim(), square.dim()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = square(i, j);
}

std::vector<Rational> RectMatrix::apply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw DimensionError("vector length " + std::to_string(x.size()) + " vs " +
                                                std::to_string(cols_) + " columns");
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
}

std::vector<Rational> RectMatrix::left_apply(std::span<const Rational> y) const {
    if (y.size() != rows_) throw DimensionError("vector length " + std::to_string(y.size()) + " vs " +
                                                std::to_string(rows_) + " rows");
    std::vector<Rational> x(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (y[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) x[j] += y[i] * (*this)(i, j);
    }
    return x;
}

namespace {

struct Elimination {
    RectMatrix m;
    std::vector<Rational> b;
    RectMatrix transform;  // accumulated row operations, rows x rows
    std::vector<std::size_t> col_perm;
    std::size_t rank = 0;
};

Elimination eliminate(const RectMatrix& a, std::span<const Rational> rhs, bool track) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Elimination e{a, std::vector<Rational>(rhs.begin(), rhs.end()), RectMatrix(track ? rows : 0, track ? rows : 0),
                  std::vector<std::size_t>(cols), 0};
    std::iota(e.col_perm.begin(), e.col_perm.end(), std::size_t{0});
    if (track)
        for (std::size_t i = 0; i < rows; ++i) e.transform(i, i) = Rational(1);

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(e.m(r1, j), e.m(r2, j));
        std::swap(e.b[r1], e.b[r2]);
        if (track)
            for (std::size_t j = 0; j < rows; ++j) std::swap(e.transform(r1, j), e.transform(r2, j));
    };

    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        // full pivoting: smallest nonzero entry (by bit size) in the trailing block
        std::size_t pr = rows;
        std::size_t pc = cols;
        std::size_t best = 0;
        for (std::size_t i = k; i < rows; ++i) {
            for (std::size_t j = k; j < cols; ++j) {
                const Rational& v = e.m(i, j);
                if (v.is_zero()) continue;
                const std::size_t sz = v.bit_size();
                if (pr == rows || sz < best) {
                    pr = i;
                    pc = j;
                    best = sz;
                }
            }
        }
        if (pr == rows) break;
        swap_rows(k, pr);
        if (pc != k) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(e.m(i, k), e.m(i, pc));
            std::swap(e.col_perm[k], e.col_perm[pc]);
        }
        const Rational inv = Rational(1) / e.m(k, k);
        for (std::size_t j = k; j < cols; ++j) e.m(k, j) *= inv;
        e.b[k] *= inv;
        if (track)
            for (std::size_t j = 0; j < rows; ++j) e.transform(k, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == k || e.m(i, k).is_zero()) continue;
            const Rational f = e.m(i, k);
            for (std::size_t j = k; j < cols; ++j)
                if (!e.m(k, j).is_zero()) e.m(i, j) -= f * e.m(k, j);
            e.b[i] -= f * e.b[k];
            if (track)
                for (std::size_t j = 0; j < rows; ++j)
                    if (!e.transform(k, j).is_zero()) e.transform(i, j) -= f * e.transform(k, j);
        }
        ++e.rank;
    }
    return e;
}

}  // namespace

SolveResult solve_exact(const RectMatrix& a, std::span<const Rational> rhs) {
    if (rhs.size() != a.rows()) {
        throw DimensionError("solve_exact: " + std::to_string(a.rows()) + " equations but rhs of length " +
                             std::to_string(rhs.size()));
    }
    Elimination e = eliminate(a, rhs, true);
    SolveResult out;
    out.rank = e.rank;
    for (std::size_t i = e.rank; i < a.rows(); ++i) {
        if (!e.b[i].is_zero()) {
            out.kind = SolveKind::inconsistent;
            out.certificate.resize(a.rows());
            for (std::size_t j = 0; j < a.rows(); ++j) out.certificate[j] = e.transform(i, j);
            out.certificate_value = e.b[i];
            return out;
        }
    }
    const std::size_t cols = a.cols();
    out.particular.assign(cols, Rational());
    for (std::size_t k = 0; k < e.rank; ++k) out.particular[e.col_perm[k]] = e.b[k];
    for (std::size_t f = e.rank; f < cols; ++f) {
        std::vector<Rational> v(cols);
        v[e.col_perm[f]] = Rational(1);
        for (std::size_t k = 0; k < e.rank; ++k) v[e.col_perm[k]] = -e.m(k, f);
        out.null_basis.push_back(std::move(v));
    }
    out.kind = out.null_basis.empty() ? SolveKind::unique : SolveKind::underdetermined;
    return out;
}

SolveResult solve_exact(const Matrix& a, std::span<const Rational> rhs) { return solve_exact(RectMatrix(a), rhs); }

std::size_t rank(const RectMatrix& a) {
    std::vector<Rational> zero(a.rows());
    return eliminate(a, zero, false).rank;
}

}  // namespace heunalg
