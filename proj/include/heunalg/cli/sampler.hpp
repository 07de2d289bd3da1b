#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "heunalg/cli/config.hpp"

namespace heunalg::cli {

class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Seeded rational sampler: numerators in [-numerator_bound, numerator_bound], denominators in [1, denominator_bound].
class Sampler {
public:
    /// `stream` separates the suites so each draws the same values whichever others run.
    Sampler(const SamplingConfig& cfg, std::uint32_t stream);

    Rational rational();
    Rational nonzero_rational();
    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi);
    /// N in [n_min, n_max] with the given parity (0 even, 1 odd, -1 any).
    int grid_size(int parity);

    /// Racah parameters satisfying `t`, the grid guards and B(x) != 0 (x < N), D(x) != 0 (x > 0).
    RacahParams racah(RacahTruncation t);
    /// Bannai-Ito parameters for an odd case, or base parameters for the even enumeration.
    BIParams bi(BICase kind);
    /// tau vectors; index 0 lies on tau1 + tau2 = 0 and index 1 on tau1 = tau2.
    std::vector<TauParams> taus(int count);
    TauParams tau();
    HeunRacahParams heun_racah_free();
    HBIParams hbi_free();

    static constexpr int max_attempts = 1000;

private:
    SamplingConfig cfg_;
    std::mt19937_64 rng_;
};

}  // namespace heunalg::cli
