#pragma once

#include <array>
#include <string>
#include <vector>

#include "heunalg/bannai_ito.hpp"
#include "heunalg/heun_racah.hpp"
#include "heunalg/linalg.hpp"

namespace heunalg {

/// p1(x) = p1_0 + p1_1 x, p2(x) = p2_0 + p2_1 x + p2_2 x^2, p3(x) = p3_0 + ... + p3_3 x^3.
struct HBIParams {
    Rational p1_0, p1_1, p2_0, p2_1, p2_2, p3_0, p3_1, p3_2, p3_3;

    [[nodiscard]] std::array<Rational, 9> values() const;
    [[nodiscard]] NamedValues named() const;
    friend bool operator==(const HBIParams&, const HBIParams&) = default;
};

struct HBIConstants {
    Rational x0, x1, x2, x3, x4, y0, y1, y2, y3;

    /// Coefficient of W in the third relation.
    [[nodiscard]] Rational w_coefficient() const { return x1 + x3 * x4; }
    [[nodiscard]] NamedValues named() const;
};

struct HBICoefficients {
    std::vector<Rational> A1, A2, A0;
};

/// Throws GridError at the points 0 and -1/2.
HBICoefficients hbi_coefficients(const HBIParams& p, std::span<const Rational> x);

GridOperator build_hbi(const HBIParams& p, const BIGrid& grid);

/// Numerators x(x+1)p1 - p2 - p3 of A1 and p3 - x^2 p1 of A2 as linear functionals on the nine parameters.
std::array<Rational, 9> a1_functional(const Rational& x);
std::array<Rational, 9> a2_functional(const Rational& x);
Rational apply_functional(const std::array<Rational, 9>& f, const HBIParams& p);

/// One row per grid point whose reflection leaves the grid.
RectMatrix truncation_constraints(const BIGrid& grid);

/// Fills two coefficients so that A1 vanishes at `a1_zeros` and A2 at `a2_zeros` (two zeros in total):
///   two A1 zeros a, b: p2_1 then p2_0;
///   two A2 zeros a, b: p3_1 then p3_0;
///   one of each: p3_0 at the A2 zero, then p2_0 at the A1 zero.
HBIParams apply_bi_truncation_constraints(HBIParams p, const std::vector<Rational>& a1_zeros,
                                          const std::vector<Rational>& a2_zeros);
/// Zeros read off the unpaired grid points.
HBIParams apply_bi_truncation_constraints(const HBIParams& p, const BIGrid& grid);

CheckReport verify_hbi_degree_raising(const GridOperator& W, const BIGrid& grid);

GridOperator algebraic_heun_bi(const BIRealization& real, const TauParams& tau);

HBIParams tau_to_p(const TauParams& tau, const BIParams& params);

HBIConstants hbi_constants_from_psi(const BIConstants& bc, const TauParams& tau);

CheckReport verify_hbi_algebra(const Matrix& X, const Matrix& W, const HBIConstants& hc);

struct LambdaResult {
    Matrix Lambda;
    CheckReport report;
};

LambdaResult lambda_element(const Matrix& X, const Matrix& W, const HBIConstants& hc, const BIConstants& bc,
                            const TauParams& tau, const Rational& casimir);

struct UpsilonChoice {
    Rational a1{-2}, a2{-2}, c1{0}, c2{0};
};

struct UpsilonFit {
    std::vector<std::string> basis;
    SolveResult restricted;  // commutator coefficient fixed at 1, no identity term
    SolveResult augmented;   // all nine terms free
    CheckReport report;
};

/// Throws PreconditionError when a1 or a2 is zero.
UpsilonFit fit_upsilon(const BIRealization& real, const TauParams& tau_hr, const TauParams& tau_hb,
                       const UpsilonChoice& choice = {});

CheckReport heun_bi_suite(const BIParams& p, const std::vector<TauParams>& taus, const std::vector<HBIParams>& draws);

}  // namespace heunalg
