#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "heunalg/cli/config.hpp"
#include "heunalg/matrix.hpp"
#include "heunalg/relalg/evaluate.hpp"
#include "heunalg/report.hpp"

namespace heunalg::cli {

class UnknownOperator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exportable names: the Racah family needs [racah], the Bannai-Ito family needs [bi], W_hr and W_hbi also [tau].
const std::vector<std::string>& operator_names();

Matrix operator_matrix(const Config& cfg, const std::string& name);

/// CSV of the operator, or "index,coordinate" lines for racah_grid and bi_grid.
std::string export_csv(const Config& cfg, const std::string& name);

/// "1,0;0,2": rows separated by ';', entries by ','.
Matrix parse_literal_matrix(const std::string& text);

/// Generators map through [fit] (operator name or literal matrix), otherwise K1 -> Y, K2 -> X, otherwise by name.
/// Scalars listed in [fit] are known; the rest are fitted.
relalg::Assignment fit_assignment(const relalg::Presentation& pres, const Config& cfg);

/// "fit" entry (fails without a solution, witness or free directions attached) and one residual entry per relation.
CheckReport fit_report(const relalg::Presentation& pres, const relalg::Assignment& asg);

/// Needs [bi] and both upsilon taus (falling back to [tau]).
CheckReport upsilon_report(const Config& cfg);

}  // namespace heunalg::cli
