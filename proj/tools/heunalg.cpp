#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "heunalg/cli/commands.hpp"
#include "heunalg/cli/run.hpp"
#include "heunalg/relalg/parser.hpp"

namespace {

using namespace heunalg;
using namespace heunalg::cli;

constexpr int kUsageError = 3;

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + out + "'");
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Config config_or_default(const std::string& path) { return path.empty() ? Config{} : load_config(path); }

void summarize(const CheckReport& rep) {
    std::cerr << rep.entries().size() << " entries;";
    for (Category c : {Category::structural, Category::oracle, Category::paper_claim})
        std::cerr << ' ' << to_string(c) << ' ' << rep.count(c, Verdict::pass) << '/'
                  << rep.count(c, Verdict::fail) << '/' << rep.count(c, Verdict::skipped);
    std::cerr << " (pass/fail/skipped)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of Racah, Bannai-Ito and Heun-type algebras on finite grids"};
    app.require_subcommand(1);

    std::string config_path, out, suite_name, op_name, rel_path;
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;

    auto* verify = app.add_subcommand("verify", "Run a suite and print the JSON report");
    verify->add_option("suite", suite_name, "racah, heun-racah, bannai-ito, heun-bi, upsilon or all")->required();
    verify->add_option("--config", config_path, "Config file")->required();
    verify->add_option("--trials", trials, "Random trials per suite");
    verify->add_option("--seed", seed, "Sampler seed");
    verify->add_option("--out", out, "Report path (default stdout)");

    auto* exp = app.add_subcommand("export", "Write an operator matrix as CSV");
    exp->add_option("--operator", op_name, "Operator name")->required();
    exp->add_option("--config", config_path, "Config file")->required();
    exp->add_option("--out", out, "CSV path (default stdout)");

    auto* fit = app.add_subcommand("fit", "Fit the scalars of a .rel presentation");
    fit->add_option("--relations", rel_path, "Presentation file")->required();
    fit->add_option("--config", config_path, "Config file");
    fit->add_option("--out", out, "Report path (default stdout)");

    auto* ups = app.add_subcommand("upsilon-fit", "Fit the Upsilon relation on a Bannai-Ito realization");
    ups->add_option("--config", config_path, "Config file")->required();
    ups->add_option("--out", out, "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsageError;
    }

    try {
        if (*verify) {
            Config cfg = load_config(config_path);
            if (trials) cfg.sampling.trials = *trials;
            if (seed) cfg.sampling.seed = *seed;
            const auto suites = parse_suites(suite_name);
            const CheckReport rep = run(cfg, suites);
            emit(report_json(rep, cfg, suites), out);
            summarize(rep);
            return exit_code(rep);
        }
        if (*exp) {
            emit(export_csv(load_config(config_path), op_name), out);
            return 0;
        }
        if (*fit) {
            const Config cfg = config_or_default(config_path);
            relalg::Presentation pres;
            try {
                pres = relalg::parse(read_file(rel_path));
            } catch (const relalg::ParseError& e) {
                std::cerr << rel_path << ':' << e.pos().line << ':' << e.pos().column << ": " << e.message() << '\n';
                return kUsageError;
            }
            const CheckReport rep = fit_report(pres, fit_assignment(pres, cfg));
            emit(report_json(rep, cfg, "fit", {rel_path}), out);
            return exit_code(rep);
        }
        if (*ups) {
            const Config cfg = load_config(config_path);
            const CheckReport rep = upsilon_report(cfg);
            emit(report_json(rep, cfg, "upsilon-fit", {"upsilon"}), out);
            return exit_code(rep);
        }
    } catch (const ConfigError& e) {
        std::cerr << config_path << ": " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
