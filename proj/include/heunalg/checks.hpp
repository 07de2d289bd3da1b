#pragma once

#include <string>

#include "heunalg/matrix.hpp"
#include "heunalg/report.hpp"

namespace heunalg {

/// Adds a pass entry when `residual` is zero; otherwise a fail entry witnessing the first nonzero entry.
CheckEntry& expect_zero(CheckReport& rep, std::string check, std::string anchor, Category cat, const Matrix& residual);

/// Adds a pass entry when a == b, with both values as witness.
CheckEntry& expect_equal(CheckReport& rep, std::string check, std::string anchor, Category cat, const Rational& got,
                         const Rational& expected, const std::string& got_name = "oracle",
                         const std::string& expected_name = "claim");

/// Adds a pass entry when `m` is a multiple of the identity; the witness holds the scalar or an off-pattern entry.
CheckEntry& expect_scalar(CheckReport& rep, std::string check, std::string anchor, Category cat, const Matrix& m);

}  // namespace heunalg
