#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunalg/linalg.hpp"
#include "heunalg/matrix.hpp"
#include "heunalg/relalg/ast.hpp"
#include "heunalg/report.hpp"

namespace heunalg::relalg {

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by fit_constants when two unknown-bearing factors are multiplied.
class NonlinearityError : public EvalError {
public:
    NonlinearityError(std::size_t relation, const std::string& text);
    [[nodiscard]] std::size_t relation() const { return relation_; }

private:
    std::size_t relation_;
};

/// Value bound to a scalar symbol.
///   known: the scalar times the identity;
///   unknown: one unknown times the identity;
///   central_unknown: sum of unknowns times the given central basis matrices, the unknowns named "sym[label]".
struct ScalarBinding {
    enum class Kind { known, unknown, central_unknown };
    Kind kind = Kind::unknown;
    Rational value;
    std::vector<std::pair<std::string, Matrix>> basis;

    static ScalarBinding known(Rational v);
    static ScalarBinding unknown();
    static ScalarBinding central(std::vector<std::pair<std::string, Matrix>> basis);
};

struct Assignment {
    std::map<std::string, Matrix> generators;
    std::map<std::string, ScalarBinding> scalars;

    Assignment& set(const std::string& name, Matrix m);
    Assignment& set(const std::string& name, const Rational& value);
    Assignment& set_unknown(const std::string& name);
    Assignment& set_central(const std::string& name, std::vector<std::pair<std::string, Matrix>> basis);

    /// Common dimension of the generator matrices; throws on mismatch or when empty.
    [[nodiscard]] std::size_t dim() const;
    /// Every generator and scalar of `pres` bound, all matrices of one dimension.
    void validate(const Presentation& pres) const;
};

Matrix evaluate(const Node& expr, const Assignment& asg);
/// lhs - rhs
Matrix evaluate(const Relation& rel, const Assignment& asg);

struct FitResult {
    SolveKind kind = SolveKind::unique;
    std::vector<std::string> unknowns;
    /// Particular solution (free directions set to 0); empty when inconsistent.
    std::vector<Rational> values;
    std::vector<std::vector<Rational>> free_directions;
    /// Per relation: residual is zero at `values`.
    std::vector<bool> residual_zero;

    // Inconsistent systems: a combination of residual entries that must vanish but equals `witness_value`.
    std::size_t witness_relation = 0;
    std::size_t witness_row = 0;
    std::size_t witness_col = 0;
    Rational witness_value;
    std::vector<Rational> certificate;

    [[nodiscard]] bool solved() const { return kind != SolveKind::inconsistent; }
    [[nodiscard]] std::optional<Rational> value(const std::string& unknown) const;
    [[nodiscard]] NamedValues named_values() const;
    /// Free directions as readable combinations, e.g. "a1 - 2*b".
    [[nodiscard]] std::vector<std::string> free_direction_text() const;
};

/// Fits every non-known scalar so that all relations hold; the relations must be affine in the unknowns.
FitResult fit_constants(const Presentation& pres, const Assignment& asg);

/// Replaces unknowns by the fitted particular solution.
Assignment substitute(const Assignment& asg, const FitResult& fit);

/// Passes iff `candidate` commutes with every listed generator; a failure names the generator and a nonzero entry.
CheckEntry check_central(const Matrix& candidate, const std::vector<std::pair<std::string, Matrix>>& generators,
                         const std::string& suite = {}, const std::string& check = "central",
                         const std::string& anchor = {});

}  // namespace heunalg::relalg
