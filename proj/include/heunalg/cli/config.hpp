#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heunalg/bannai_ito.hpp"
#include "heunalg/heun_bi.hpp"
#include "heunalg/heun_racah.hpp"
#include "heunalg/racah.hpp"

namespace heunalg::cli {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, const std::string& message);
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct SamplingConfig {
    std::uint64_t seed = 1;
    int trials = 0;
    int numerator_bound = 12;
    int denominator_bound = 6;
    int n_min = 2;
    int n_max = 6;
    int taus_per_set = 10;
    int draws_per_grid = 10;
};

struct UpsilonConfig {
    std::optional<TauParams> tau_hr, tau_hb;
    UpsilonChoice choice;
};

/// Operator or literal matrix per generator, known values per scalar.
struct FitConfig {
    std::map<std::string, std::string> generators;
    std::map<std::string, Rational> scalars;
};

struct Config {
    std::optional<RacahParams> racah;
    std::optional<BIParams> bi;
    std::optional<TauParams> tau;
    UpsilonConfig upsilon;
    FitConfig fit;
    SamplingConfig sampling;
    std::map<std::string, bool> suites;
};

/// Sections [sampling] [racah] [bi] [tau] [upsilon] [fit] [suites]; `key = value` lines, `#` comments.
/// Unknown sections or keys, malformed values and incomplete parameter blocks raise ConfigError with the line.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

}  // namespace heunalg::cli
