#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heunalg/grids.hpp"
#include "heunalg/matrix.hpp"
#include "heunalg/racah.hpp"
#include "heunalg/report.hpp"

namespace heunalg {

struct BIParams {
    Rational rho1, rho2, r1, r2;
    int N = 1;
    BICaseSpec spec;

    /// rho1 + rho2 - r1 - r2 + 1/2
    [[nodiscard]] Rational k() const;
    /// (-1)^n (n + k), n = 0..N.
    [[nodiscard]] std::vector<Rational> eigenvalues() const;
    [[nodiscard]] NamedValues named() const;
};

/// Throws PreconditionError on a violated truncation identity or repeated eigenvalues.
void validate(const BIParams& p);

/// Scalars of omega_1, omega_2, omega_3 and Q in the realization.
struct BIConstants {
    Rational w1, w2, w3, Q;

    static BIConstants closed_form(const BIParams& p);
    [[nodiscard]] NamedValues named() const;
};

struct BIRealization {
    Matrix Bt1, Bt2, B1, B2, B3;
    BIGrid grid;
    BIParams params;
    BIConstants constants;
};

/// Throws GridError on a closure failure.
BIRealization bi_realization(const BIParams& p);

/// w1, w2, w3, Q fitted on the realization matrices; empty unless the fit is unique.
std::optional<BIConstants> fit_bi_constants(const BIRealization& real);

CheckReport verify_bi(const BIRealization& real);
CheckReport verify_bi_spectrum(const BIRealization& real);

struct RacahInBI {
    Matrix A, B, C, P, Gamma;
    CheckReport report;
};

RacahInBI racah_in_bi(const BIRealization& real);

/// The 16 (i, j, anchor, pairing) choices of the N-even grid.
std::vector<BICaseSpec> even_case_specs();

/// Copy of `base` with r_i solved from the pairing identity of `spec`.
BIParams even_case_params(const BIParams& base, const BICaseSpec& spec);

/// Realization, relations, spectrum and the Racah embedding for one parameter set.
CheckReport bi_suite(const BIParams& p);

/// Tries every N-even combination on `base`, records closure verdicts and runs bi_suite on the closing ones.
CheckReport bi_even_enumeration(const BIParams& base);

}  // namespace heunalg
