#include "heunalg/relalg/evaluate.hpp"

#include <sstream>

#include "heunalg/relalg/parser.hpp"

namespace heunalg::relalg {

NonlinearityError::NonlinearityError(std::size_t relation, const std::string& text)
    : EvalError("relation " + std::to_string(relation + 1) + " is not affine in the unknown scalars: " + text),
      relation_(relation) {}

ScalarBinding ScalarBinding::known(Rational v) {
    ScalarBinding b;
    b.kind = Kind::known;
    b.value = std::move(v);
    return b;
}

ScalarBinding ScalarBinding::unknown() { return {}; }

ScalarBinding ScalarBinding::central(std::vector<std::pair<std::string, Matrix>> basis) {
    ScalarBinding b;
    b.kind = Kind::central_unknown;
    b.basis = std::move(basis);
    return b;
}

Assignment& Assignment::set(const std::string& name, Matrix m) {
    generators[name] = std::move(m);
    return *this;
}

Assignment& Assignment::set(const std::string& name, const Rational& value) {
    scalars[name] = ScalarBinding::known(value);
    return *this;
}

Assignment& Assignment::set_unknown(const std::string& name) {
    scalars[name] = ScalarBinding::unknown();
    return *this;
}

Assignment& Assignment::set_central(const std::string& name, std::vector<std::pair<std::string, Matrix>> basis) {
    scalars[name] = ScalarBinding::central(std::move(basis));
    return *this;
}

std::size_t Assignment::dim() const {
    if (generators.empty()) throw EvalError("assignment has no generator matrices");
    const std::size_t n = generators.begin()->second.dim();
    for (const auto& [name, m] : generators)
        if (m.dim() != n)
            throw DimensionError("generator " + name + " has dimension " + std::to_string(m.dim()) + ", expected " +
                                 std::to_string(n));
    for (const auto& [name, s] : scalars)
        for (const auto& [label, m] : s.basis)
            if (m.dim() != n)
                throw DimensionError("basis " + name + "[" + label + "] has dimension " + std::to_string(m.dim()) +
                                     ", expected " + std::to_string(n));
    return n;
}

void Assignment::validate(const Presentation& pres) const {
    for (const auto& g : pres.generators)
        if (!generators.contains(g)) throw EvalError("generator '" + g + "' is not assigned");
    for (const auto& s : pres.scalars)
        if (!scalars.contains(s.name)) throw EvalError("scalar '" + s.name + "' is not assigned");
    (void)dim();
}

namespace {

/// constant + sum_k unknown_k * coeff_k
struct Affine {
    Matrix constant;
    std::map<std::size_t, Matrix> coeffs;

    [[nodiscard]] bool is_constant() const { return coeffs.empty(); }
};

Affine add(Affine a, const Affine& b, bool subtract) {
    if (subtract) a.constant -= b.constant;
    else a.constant += b.constant;
    for (const auto& [k, m] : b.coeffs) {
        auto it = a.coeffs.find(k);
        if (it == a.coeffs.end()) a.coeffs.emplace(k, subtract ? -m : m);
        else if (subtract) it->second -= m;
        else it->second += m;
    }
    return a;
}

Affine negate(Affine a) {
    a.constant = -a.constant;
    for (auto& [k, m] : a.coeffs) m = -m;
    return a;
}

class Evaluator {
public:
    Evaluator(const Assignment& asg, bool allow_unknowns, std::size_t relation)
        : asg_(asg), n_(asg.dim()), allow_unknowns_(allow_unknowns), relation_(relation) {
        for (const auto& [name, b] : asg.scalars) {
            if (b.kind == ScalarBinding::Kind::unknown) {
                index_[name] = unknowns_.size();
                unknowns_.push_back(name);
            } else if (b.kind == ScalarBinding::Kind::central_unknown) {
                index_[name] = unknowns_.size();
                for (const auto& [label, m] : b.basis) unknowns_.push_back(name + "[" + label + "]");
            }
        }
    }

    [[nodiscard]] const std::vector<std::string>& unknowns() const { return unknowns_; }

    Affine eval(const Node& n) {
        switch (n.kind) {
            case NodeKind::literal: return constant(Matrix::scalar(n_, n.value));
            case NodeKind::symbol: return symbol(n);
            case NodeKind::paren: return eval(n.children[0]);
            case NodeKind::sum: {
                Affine acc = eval(n.children[0]);
                if (n.negated[0]) acc = negate(std::move(acc));
                for (std::size_t k = 1; k < n.children.size(); ++k) acc = add(std::move(acc), eval(n.children[k]), n.negated[k]);
                return acc;
            }
            case NodeKind::product: {
                Affine acc = eval(n.children[0]);
                for (std::size_t k = 1; k < n.children.size(); ++k) acc = multiply(acc, eval(n.children[k]), n);
                return acc;
            }
            case NodeKind::power: {
                Affine base = eval(n.children[0]);
                if (n.exponent == 0) return constant(Matrix::identity(n_));
                Affine acc = base;
                for (unsigned k = 1; k < n.exponent; ++k) acc = multiply(acc, base, n);
                return acc;
            }
            case NodeKind::commutator:
            case NodeKind::anticommutator: {
                const Affine a = eval(n.children[0]);
                const Affine b = eval(n.children[1]);
                return add(multiply(a, b, n), multiply(b, a, n), n.kind == NodeKind::commutator);
            }
        }
        throw EvalError("unknown node kind");
    }

private:
    Affine constant(Matrix m) const { return Affine{std::move(m), {}}; }

    Affine symbol(const Node& n) const {
        if (auto g = asg_.generators.find(n.name); g != asg_.generators.end()) return constant(g->second);
        auto s = asg_.scalars.find(n.name);
        if (s == asg_.scalars.end())
            throw EvalError(std::to_string(n.pos.line) + ":" + std::to_string(n.pos.column) + ": '" + n.name +
                            "' is not assigned");
        const ScalarBinding& b = s->second;
        if (b.kind == ScalarBinding::Kind::known) return constant(Matrix::scalar(n_, b.value));
        if (!allow_unknowns_) throw EvalError("scalar '" + n.name + "' is unknown");
        Affine out{Matrix(n_), {}};
        const std::size_t base = index_.at(n.name);
        if (b.kind == ScalarBinding::Kind::unknown) {
            out.coeffs.emplace(base, Matrix::identity(n_));
        } else {
            for (std::size_t k = 0; k < b.basis.size(); ++k) out.coeffs.emplace(base + k, b.basis[k].second);
        }
        return out;
    }

    Affine multiply(const Affine& a, const Affine& b, const Node& where) const {
        if (!a.is_constant() && !b.is_constant()) throw NonlinearityError(relation_, print(where));
        Affine out{a.constant * b.constant, {}};
        for (const auto& [k, m] : a.coeffs) out.coeffs.emplace(k, m * b.constant);
        for (const auto& [k, m] : b.coeffs) out.coeffs.emplace(k, a.constant * m);
        return out;
    }

    const Assignment& asg_;
    std::size_t n_;
    bool allow_unknowns_;
    std::size_t relation_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::string> unknowns_;
};

std::string term_text(const Rational& c, const std::string& name, bool first) {
    std::string s;
    const Rational mag = c.abs();
    if (first) s += c.sign() < 0 ? "-" : "";
    else s += c.sign() < 0 ? " - " : " + ";
    if (mag != Rational(1)) s += mag.str() + "*";
    return s + name;
}

}  // namespace

Matrix evaluate(const Node& expr, const Assignment& asg) {
    Evaluator ev(asg, false, 0);
    return ev.eval(expr).constant;
}

Matrix evaluate(const Relation& rel, const Assignment& asg) {
    Evaluator ev(asg, false, 0);
    return ev.eval(rel.lhs).constant - ev.eval(rel.rhs).constant;
}

std::optional<Rational> FitResult::value(const std::string& unknown) const {
    if (!solved()) return std::nullopt;
    for (std::size_t k = 0; k < unknowns.size(); ++k)
        if (unknowns[k] == unknown) return values[k];
    return std::nullopt;
}

NamedValues FitResult::named_values() const {
    NamedValues out;
    if (!solved()) return out;
    for (std::size_t k = 0; k < unknowns.size(); ++k) out.emplace_back(unknowns[k], values[k].str());
    return out;
}

std::vector<std::string> FitResult::free_direction_text() const {
    std::vector<std::string> out;
    for (const auto& dir : free_directions) {
        std::string s;
        for (std::size_t k = 0; k < dir.size(); ++k)
            if (!dir[k].is_zero()) s += term_text(dir[k], unknowns[k], s.empty());
        out.push_back(s);
    }
    return out;
}

FitResult fit_constants(const Presentation& pres, const Assignment& asg) {
    asg.validate(pres);
    const std::size_t n = asg.dim();
    FitResult result;
    std::vector<Affine> residuals;
    std::vector<std::string> names;
    for (std::size_t r = 0; r < pres.relations.size(); ++r) {
        Evaluator ev(asg, true, r);
        residuals.push_back(add(ev.eval(pres.relations[r].lhs), ev.eval(pres.relations[r].rhs), true));
        names = ev.unknowns();
    }
    if (names.empty()) names = Evaluator(asg, true, 0).unknowns();
    result.unknowns = names;

    const std::size_t per = n * n;
    RectMatrix a(residuals.size() * per, names.size());
    std::vector<Rational> rhs(residuals.size() * per);
    for (std::size_t r = 0; r < residuals.size(); ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = r * per + i * n + j;
                rhs[row] = -residuals[r].constant(i, j);
                for (const auto& [k, m] : residuals[r].coeffs) a(row, k) = m(i, j);
            }
        }
    }
    SolveResult sol = solve_exact(a, rhs);
    result.kind = sol.kind;
    if (sol.kind == SolveKind::inconsistent) {
        result.certificate = sol.certificate;
        result.witness_value = sol.certificate_value;
        for (std::size_t row = 0; row < sol.certificate.size(); ++row) {
            if (!sol.certificate[row].is_zero()) {
                result.witness_relation = row / per;
                result.witness_row = (row % per) / n;
                result.witness_col = row % n;
                break;
            }
        }
        result.residual_zero.assign(residuals.size(), false);
        return result;
    }
    result.values = sol.particular;
    result.free_directions = sol.null_basis;
    for (const auto& res : residuals) {
        Matrix m = res.constant;
        for (const auto& [k, c] : res.coeffs) m += c * result.values[k];
        result.residual_zero.push_back(m.is_zero());
    }
    return result;
}

Assignment substitute(const Assignment& asg, const FitResult& fit) {
    if (!fit.solved()) throw EvalError("cannot substitute an inconsistent fit");
    Assignment out = asg;
    for (auto& [name, b] : out.scalars) {
        if (b.kind == ScalarBinding::Kind::unknown) {
            b = ScalarBinding::known(*fit.value(name));
        } else if (b.kind == ScalarBinding::Kind::central_unknown) {
            // A central combination is not a scalar; fold it into a generator-like constant.
            Matrix m(asg.dim());
            for (const auto& [label, basis] : b.basis) m += basis * *fit.value(name + "[" + label + "]");
            out.generators[name] = m;
        }
    }
    for (auto it = out.scalars.begin(); it != out.scalars.end();) {
        if (it->second.kind == ScalarBinding::Kind::central_unknown) it = out.scalars.erase(it);
        else ++it;
    }
    return out;
}

CheckEntry check_central(const Matrix& candidate, const std::vector<std::pair<std::string, Matrix>>& generators,
                         const std::string& suite, const std::string& check, const std::string& anchor) {
    CheckReport rep(suite);
    for (const auto& [name, g] : generators) {
        const Matrix c = commutator(candidate, g);
        if (auto nz = c.first_nonzero()) {
            CheckEntry& e = rep.add(check, anchor, Category::oracle, false, "does not commute with " + name);
            e.witness = {{"generator", name},
                         {"row", std::to_string(nz->first)},
                         {"col", std::to_string(nz->second)},
                         wv("entry", c(nz->first, nz->second))};
            return e;
        }
    }
    return rep.add(check, anchor, Category::oracle, true, "commutes with all generators");
}

}  // namespace heunalg::relalg
