#include "heunalg/checks.hpp"

#include <utility>

namespace heunalg {

CheckEntry& expect_zero(CheckReport& rep, std::string check, std::string anchor, Category cat, const Matrix& residual) {
    const auto nz = residual.first_nonzero();
    CheckEntry& e = rep.add(std::move(check), std::move(anchor), cat, !nz.has_value(),
                            nz ? "residual is nonzero" : "residual is zero");
    if (nz)
        e.witness = {{"row", std::to_string(nz->first)},
                     {"col", std::to_string(nz->second)},
                     wv("entry", residual(nz->first, nz->second))};
    return e;
}

CheckEntry& expect_equal(CheckReport& rep, std::string check, std::string anchor, Category cat, const Rational& got,
                         const Rational& expected, const std::string& got_name, const std::string& expected_name) {
    const bool ok = got == expected;
    CheckEntry& e = rep.add(std::move(check), std::move(anchor), cat, ok, ok ? "values agree" : "values differ");
    e.witness = {wv(got_name, got), wv(expected_name, expected)};
    return e;
}

CheckEntry& expect_scalar(CheckReport& rep, std::string check, std::string anchor, Category cat, const Matrix& m) {
    const auto s = m.scalar_value();
    CheckEntry& e = rep.add(std::move(check), std::move(anchor), cat, s.has_value(),
                            s ? "multiple of the identity" : "not a multiple of the identity");
    if (s) {
        e.witness = {wv("scalar", *s)};
    } else {
        const Matrix off = m - Matrix::scalar(m.dim(), m(0, 0));
        const auto nz = off.first_nonzero();
        e.witness = {{"row", std::to_string(nz->first)},
                     {"col", std::to_string(nz->second)},
                     wv("entry", m(nz->first, nz->second)),
                     wv("entry_0_0", m(0, 0))};
    }
    return e;
}

}  // namespace heunalg
