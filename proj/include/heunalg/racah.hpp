#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "heunalg/grids.hpp"
#include "heunalg/matrix.hpp"
#include "heunalg/relalg/evaluate.hpp"
#include "heunalg/report.hpp"

namespace heunalg {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class RacahTruncation { alpha, beta_delta, gamma };

std::string to_string(RacahTruncation t);
RacahTruncation parse_racah_truncation(const std::string& text);

/// Truncation identities: alpha+1 = -N, beta+delta+1 = -N, gamma+1 = -N.
struct RacahParams {
    Rational alpha, beta, gamma, delta;
    int N = 1;
    RacahTruncation truncation = RacahTruncation::alpha;

    /// Eigenvalues n(n+alpha+beta+1), n = 0..N.
    [[nodiscard]] std::vector<Rational> eigenvalues() const;
};

/// Throws PreconditionError naming the violated guard: truncation identity, grid denominators,
/// closure of B and D, distinct eigenvalues.
void validate(const RacahParams& p);

/// Structure constants; b, d1, d2 and C are the scalars of central elements.
struct RacahConstants {
    Rational a1, a2, b, c1, c2, d1, d2, C;

    /// The printed closed forms.
    static RacahConstants closed_form(const RacahParams& p);
    [[nodiscard]] NamedValues named() const;
};

/// b as fitted on the realization: -2 alpha beta - alpha(gamma+delta+2) + beta(delta-gamma-2) - 2(gamma+1)(delta+1).
Rational racah_b_fitted_form(const RacahParams& p);

/// B(x), D(x) of the difference realization on the grid.
std::vector<Rational> racah_B(const RacahParams& p);
std::vector<Rational> racah_D(const RacahParams& p);

struct RacahRealization {
    Matrix X, Y, K3;  // K1 -> Y, K2 -> X, K3 = [Y, X]
    RacahGrid grid;
    RacahParams params;
    RacahConstants constants;  // closed forms
};

RacahRealization racah_realization(const RacahParams& p);

/// Joint fit of all seven constants on the realization; empty if the fit is not unique.
std::optional<RacahConstants> fit_racah_constants(const RacahRealization& real, relalg::FitResult* fit = nullptr);

CheckReport verify_racah(const RacahRealization& real);

Matrix casimir_matrix(const Matrix& K1, const Matrix& K2, const RacahConstants& k);

struct CasimirResult {
    Matrix C;
    CheckReport report;
};

/// Casimir built from the fitted constants; centrality, scalarity and the printed C as a claim.
CasimirResult casimir_racah(const RacahRealization& real);

struct ReducedRacah {
    Matrix R1, R2, R3;
    Rational d, e1, e2;
    RacahConstants constants;  // the constants the affine map used
    CheckReport report;
};

/// Reduced generators under the inverse affine map; d, e1, e2 from the printed formulas.
ReducedRacah to_reduced(const RacahRealization& real, const RacahConstants& k);
ReducedRacah to_reduced(const RacahRealization& real);

/// d, e1, e2 of the reduced algebra from Racah constants.
void reduced_constants(const RacahConstants& k, Rational& d, Rational& e1, Rational& e2);

struct EquitableRacah {
    Matrix V1, V2, V3, P;
    CheckReport report;
};

EquitableRacah to_equitable(const ReducedRacah& red, const RacahRealization& real);

CheckEntry verify_racah_spectrum(const RacahRealization& real, CheckReport& rep);

/// Everything above for one parameter set.
CheckReport racah_suite(const RacahParams& p);

}  // namespace heunalg
