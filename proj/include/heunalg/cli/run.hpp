#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "heunalg/cli/config.hpp"
#include "heunalg/report.hpp"

namespace heunalg::cli {

enum class Suite { racah, heun_racah, bannai_ito, heun_bi, upsilon };

std::string to_string(Suite s);
/// Accepts the suite names with '_' or '-', and "all".
std::vector<Suite> parse_suites(const std::string& name);
/// Suites enabled in the [suites] section, or all of them when the section is absent.
std::vector<Suite> configured_suites(const Config& cfg);

/// Truncation and Bannai-Ito case of random trial `trial`, cycling in declaration order.
RacahTruncation truncation_for(std::size_t trial);
BICase bi_case_for(std::size_t trial);

/// Fixed parameters that violate a precondition.
class RunError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed parameters from the config run as trial 0; `sampling.trials` seeded draws follow as trials 1..K.
/// All draws happen before the trials run in parallel; the report is sorted by suite, check and trial.
CheckReport run(const Config& cfg, const std::vector<Suite>& suites);

/// 0: no failures; 1: a structural or oracle failure; 2: paper-claim failures only.
int exit_code(const CheckReport& report);

/// `command` and `labels` head the document; rationals are strings, witnesses are name/value pairs.
std::string report_json(const CheckReport& report, const Config& cfg, const std::string& command,
                        const std::vector<std::string>& labels);
std::string report_json(const CheckReport& report, const Config& cfg, const std::vector<Suite>& suites);

}  // namespace heunalg::cli
