#pragma once

#include <random>
#include <string>
#include <vector>

#include "heunalg/matrix.hpp"
#include "heunalg/rational.hpp"
#include "heunalg/relalg/ast.hpp"

namespace testing {

using heunalg::Matrix;
using heunalg::Rational;

inline Rational random_rational(std::mt19937_64& rng, int num = 9, int den = 5) {
    std::uniform_int_distribution<int> n(-num, num);
    std::uniform_int_distribution<int> d(1, den);
    return Rational(n(rng), d(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t dim, int num = 9, int den = 5) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = random_rational(rng, num, den);
    return m;
}

/// Determinant by plain row reduction; independent of the library's full-pivot solver.
inline Rational det(Matrix m) {
    const std::size_t n = m.dim();
    Rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m(r, c) / m(c, c);
            if (f.is_zero()) continue;
            for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return d;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t dim) {
    for (;;) {
        Matrix m = random_matrix(rng, dim, 4, 3);
        if (!det(m).is_zero()) return m;
    }
}

/// Random well-formed expression over the given symbols, every node kind reachable.
class ExprGen {
public:
    ExprGen(std::uint64_t seed, std::vector<std::string> symbols) : rng_(seed), symbols_(std::move(symbols)) {}

    heunalg::relalg::Node expr(int depth = 4) {
        using heunalg::relalg::Node;
        std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 7);
        switch (kind(rng_)) {
            case 0: {
                std::uniform_int_distribution<int> n(0, 20), d(1, 6);
                return Node::literal(Rational(n(rng_), d(rng_)));
            }
            case 1: return Node::symbol(pick());
            case 2: {
                std::vector<Node> terms;
                std::vector<bool> neg;
                const int k = 2 + coin() + coin();
                for (int i = 0; i < k; ++i) {
                    terms.push_back(sum_operand(depth - 1));
                    neg.push_back(coin() == 1);
                }
                return Node::sum(std::move(terms), std::move(neg));
            }
            case 3: {
                std::vector<Node> factors;
                const int k = 2 + coin();
                for (int i = 0; i < k; ++i) factors.push_back(factor(depth - 1));
                return Node::product(std::move(factors));
            }
            case 4: {
                std::uniform_int_distribution<unsigned> e(2, 3);
                return Node::power(atom(depth - 1), e(rng_));
            }
            case 5: return Node::commutator(expr(depth - 1), expr(depth - 1));
            case 6: return Node::anticommutator(expr(depth - 1), expr(depth - 1));
            default: return Node::paren(expr(depth - 1));
        }
    }

private:
    int coin() { return std::uniform_int_distribution<int>(0, 1)(rng_); }
    std::string pick() { return symbols_[std::uniform_int_distribution<std::size_t>(0, symbols_.size() - 1)(rng_)]; }

    // Sums nested inside sums or products need parentheses to survive printing.
    heunalg::relalg::Node wrap(heunalg::relalg::Node n) {
        using heunalg::relalg::NodeKind;
        if (n.kind == NodeKind::sum) return heunalg::relalg::Node::paren(std::move(n));
        return n;
    }
    heunalg::relalg::Node sum_operand(int depth) { return wrap(expr(depth)); }
    heunalg::relalg::Node factor(int depth) {
        using heunalg::relalg::NodeKind;
        auto n = expr(depth);
        if (n.kind == NodeKind::sum || n.kind == NodeKind::product) return heunalg::relalg::Node::paren(std::move(n));
        return n;
    }
    heunalg::relalg::Node atom(int depth) {
        using heunalg::relalg::NodeKind;
        auto n = expr(depth);
        if (n.kind == NodeKind::sum || n.kind == NodeKind::product || n.kind == NodeKind::power ||
            (n.kind == NodeKind::literal && !n.value.is_integer()))
            return heunalg::relalg::Node::paren(std::move(n));
        return n;
    }

    std::mt19937_64 rng_;
    std::vector<std::string> symbols_;
};

}  // namespace testing
