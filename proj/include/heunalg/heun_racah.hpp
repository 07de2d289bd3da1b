#pragma once

#include "heunalg/grids.hpp"
#include "heunalg/racah.hpp"

namespace heunalg {

/// pi1(z) = t0 + t1 z, pi2(z) = u0 + u1 z + u2 z^2, pi3(z) = v0 + v1 z + v2 z^2 + v3 z^3.
struct HeunRacahParams {
    Rational t0, t1, u0, u1, u2, v0, v1, v2, v3;

    [[nodiscard]] NamedValues named() const;
    friend bool operator==(const HeunRacahParams&, const HeunRacahParams&) = default;
};

/// W = tau1 XY + tau2 YX + tau3 X + tau4 Y + tau0.
struct TauParams {
    Rational tau0, tau1, tau2, tau3, tau4;

    [[nodiscard]] NamedValues named(const std::string& prefix = "tau") const;
};

struct HRConstants {
    Rational x0, x1, x2, x3, x4, x5, y0, y1, y2, y3;

    /// Coefficients of W and {X,W} in the third relation.
    [[nodiscard]] Rational w_coefficient() const { return x1 - x3 * x4; }
    [[nodiscard]] Rational xw_coefficient() const { return x2 - x3 * x5; }
    [[nodiscard]] NamedValues named() const;
};

struct HeunRacahCoefficients {
    std::vector<Rational> A1, A2, A0;
};

HeunRacahCoefficients heun_racah_coefficients(const HeunRacahParams& p, const RacahGrid& grid);

/// A1(x) T+ + A2(x) T- + A0(x) I on the grid; closure needs A1(N) = 0 and A2(0) = 0.
GridOperator build_heun_racah(const HeunRacahParams& p, const RacahGrid& grid);

/// Fills v0 and v1 so that x divides A2 and (x-N) divides A1.
HeunRacahParams apply_racah_truncation(const Rational& t0, const Rational& t1, const Rational& u0, const Rational& u1,
                                       const Rational& u2, const Rational& v2, const Rational& v3,
                                       const RacahGrid& grid);
HeunRacahParams apply_racah_truncation(HeunRacahParams p, const RacahGrid& grid);

/// deg(W lambda^n) <= n+1 with leading coefficient t1 + 2n u2 + n(n-1) v3 for n = 0..N-1.
CheckReport verify_degree_raising(const GridOperator& W, const RacahGrid& grid, const HeunRacahParams& p);

/// t0 = t1 = u2 = v3 = 0, v2 = 1, u0 = (alpha+1)(gamma+1)(beta+delta+1)/2, u1 = (alpha+beta+2)/2, truncated.
HeunRacahParams specialize_to_racah(const RacahParams& rp, const RacahGrid& grid);

GridOperator algebraic_heun_racah(const RacahRealization& real, const TauParams& tau);

HeunRacahParams tau_to_pi(const TauParams& tau, const RacahParams& rp);

HRConstants hr_constants_from_phi(const RacahConstants& rc, const TauParams& tau);

/// Z = [W, X]; both relations with `hc`, a staged fit of all ten constants, and the Jacobi control.
CheckReport verify_heun_racah_algebra(const Matrix& X, const Matrix& W, const HRConstants& hc);

struct OmegaCoefficients {
    Rational e1, e2, e3, e4, e5, e6, e7, e8, e9;
};

OmegaCoefficients omega_coefficients(const HRConstants& hc);
Matrix omega_matrix(const Matrix& X, const Matrix& W, const OmegaCoefficients& e);

struct OmegaResult {
    Matrix Omega;
    CheckReport report;
};

/// Centrality of Omega against X, W, Z, and the printed map to u C + v, where `casimir` is the Racah
/// Casimir scalar of the realization.
OmegaResult omega(const Matrix& X, const Matrix& W, const HRConstants& hc, const RacahConstants& rc,
                  const TauParams& tau, const Rational& casimir);

/// One Racah parameter set with one tau; `draws` are free Heun-Racah parameters for the degree checks.
CheckReport heun_racah_suite(const RacahParams& rp, const std::vector<TauParams>& taus,
                             const std::vector<HeunRacahParams>& draws);

}  // namespace heunalg
