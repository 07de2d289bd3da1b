#include "heunalg/cli/run.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include <json.hpp>

#include "heunalg/cli/sampler.hpp"

namespace heunalg::cli {

std::string to_string(Suite s) {
    switch (s) {
        case Suite::racah: return "racah";
        case Suite::heun_racah: return "heun_racah";
        case Suite::bannai_ito: return "bannai_ito";
        case Suite::heun_bi: return "heun_bi";
        case Suite::upsilon: return "upsilon";
    }
    return "?";
}

RacahTruncation truncation_for(std::size_t trial) {
    constexpr RacahTruncation order[] = {RacahTruncation::alpha, RacahTruncation::beta_delta, RacahTruncation::gamma};
    return order[trial % 3];
}

BICase bi_case_for(std::size_t trial) {
    constexpr BICase order[] = {BICase::odd_rho, BICase::odd_r, BICase::even};
    return order[trial % 3];
}

namespace {

const std::vector<Suite> kAll = {Suite::racah, Suite::heun_racah, Suite::bannai_ito, Suite::heun_bi, Suite::upsilon};

using Task = std::function<CheckReport()>;

struct Planned {
    std::size_t trial;
    Task task;
};


void check_fixed_racah(const RacahParams& p) {
    try {
        validate(p);
    } catch (const std::exception& e) {
        throw RunError(std::string("[racah] parameters rejected: ") + e.what());
    }
}

void check_fixed_bi(const BIParams& p) {
    try {
        bi_realization(p);
    } catch (const std::exception& e) {
        throw RunError(std::string("[bi] parameters rejected: ") + e.what());
    }
}

std::vector<HeunRacahParams> hr_draws(Sampler& s, int count) {
    std::vector<HeunRacahParams> out;
    for (int i = 0; i < count; ++i) out.push_back(s.heun_racah_free());
    return out;
}

std::vector<HBIParams> hbi_draws(Sampler& s, int count) {
    std::vector<HBIParams> out;
    for (int i = 0; i < count; ++i) out.push_back(s.hbi_free());
    return out;
}

CheckReport tag(CheckReport rep, const std::string& label) {
    CheckReport out(rep.suite());
    for (CheckEntry e : rep.entries()) {
        e.anchor += " " + label;
        out.add(e).suite = e.suite;
    }
    return out;
}

CheckReport heun_bi_even(const BIParams& base, const std::vector<TauParams>& taus, const std::vector<HBIParams>& draws) {
    CheckReport rep("heun_bi");
    for (const BICaseSpec& spec : even_case_specs()) {
        const BIParams p = even_case_params(base, spec);
        try {
            bi_realization(p);
        } catch (const std::exception& e) {
            rep.skip("even_combination", "bi-grid", Category::oracle, spec.str() + ": " + e.what());
            continue;
        }
        rep.append(tag(heun_bi_suite(p, taus, draws), spec.str()));
    }
    return rep;
}

BIParams closing_even(const BIParams& base) {
    for (const BICaseSpec& spec : even_case_specs()) {
        const BIParams p = even_case_params(base, spec);
        try {
            bi_realization(p);
            return p;
        } catch (const std::exception&) {
        }
    }
    throw SamplingError("no closing N-even combination");
}

std::vector<Planned> plan(const Config& cfg, Suite suite) {
    std::vector<Planned> out;
    const SamplingConfig& sc = cfg.sampling;
    Sampler s(sc, static_cast<std::uint32_t>(suite) + 1);
    const int trials = sc.trials;
    switch (suite) {
        case Suite::racah: {
            if (cfg.racah) {
                check_fixed_racah(*cfg.racah);
                out.push_back({0, [p = *cfg.racah] { return racah_suite(p); }});
            }
            for (int t = 1; t <= trials; ++t) {
                const RacahParams p = s.racah(truncation_for(static_cast<std::size_t>(t)));
                out.push_back({static_cast<std::size_t>(t), [p] { return racah_suite(p); }});
            }
            break;
        }
        case Suite::heun_racah: {
            if (cfg.racah) {
                check_fixed_racah(*cfg.racah);
                const auto taus = cfg.tau ? std::vector<TauParams>{*cfg.tau} : s.taus(sc.taus_per_set);
                const auto draws = hr_draws(s, sc.draws_per_grid);
                out.push_back({0, [p = *cfg.racah, taus, draws] { return heun_racah_suite(p, taus, draws); }});
            }
            for (int t = 1; t <= trials; ++t) {
                const RacahParams p = s.racah(truncation_for(static_cast<std::size_t>(t)));
                const auto taus = s.taus(sc.taus_per_set);
                const auto draws = hr_draws(s, sc.draws_per_grid);
                out.push_back({static_cast<std::size_t>(t), [p, taus, draws] { return heun_racah_suite(p, taus, draws); }});
            }
            break;
        }
        case Suite::bannai_ito: {
            if (cfg.bi) {
                check_fixed_bi(*cfg.bi);
                out.push_back({0, [p = *cfg.bi] { return bi_suite(p); }});
            }
            for (int t = 1; t <= trials; ++t) {
                const BICase kind = bi_case_for(static_cast<std::size_t>(t));
                const BIParams p = s.bi(kind);
                if (kind == BICase::even)
                    out.push_back({static_cast<std::size_t>(t), [p] { return bi_even_enumeration(p); }});
                else
                    out.push_back({static_cast<std::size_t>(t), [p] { return bi_suite(p); }});
            }
            break;
        }
        case Suite::heun_bi: {
            if (cfg.bi) {
                check_fixed_bi(*cfg.bi);
                const auto taus = cfg.tau ? std::vector<TauParams>{*cfg.tau} : s.taus(sc.taus_per_set);
                const auto draws = hbi_draws(s, sc.draws_per_grid);
                out.push_back({0, [p = *cfg.bi, taus, draws] { return heun_bi_suite(p, taus, draws); }});
            }
            for (int t = 1; t <= trials; ++t) {
                const BICase kind = bi_case_for(static_cast<std::size_t>(t));
                const BIParams p = s.bi(kind);
                const auto taus = s.taus(sc.taus_per_set);
                const auto draws = hbi_draws(s, sc.draws_per_grid);
                if (kind == BICase::even)
                    out.push_back({static_cast<std::size_t>(t), [p, taus, draws] { return heun_bi_even(p, taus, draws); }});
                else
                    out.push_back({static_cast<std::size_t>(t), [p, taus, draws] { return heun_bi_suite(p, taus, draws); }});
            }
            break;
        }
        case Suite::upsilon: {
            const UpsilonChoice choice = cfg.upsilon.choice;
            if (cfg.bi) {
                check_fixed_bi(*cfg.bi);
                const TauParams hr = cfg.upsilon.tau_hr ? *cfg.upsilon.tau_hr : s.tau();
                const TauParams hb = cfg.upsilon.tau_hb ? *cfg.upsilon.tau_hb : s.tau();
                out.push_back({0, [p = *cfg.bi, hr, hb, choice] {
                                   return fit_upsilon(bi_realization(p), hr, hb, choice).report;
                               }});
            }
            for (int t = 1; t <= trials; ++t) {
                const BICase kind = bi_case_for(static_cast<std::size_t>(t));
                BIParams p = s.bi(kind);
                if (kind == BICase::even) p = closing_even(p);
                const TauParams hr = s.tau();
                const TauParams hb = s.tau();
                out.push_back({static_cast<std::size_t>(t), [p, hr, hb, choice] {
                                   return fit_upsilon(bi_realization(p), hr, hb, choice).report;
                               }});
            }
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<Suite> parse_suites(const std::string& name) {
    std::string n = name;
    std::replace(n.begin(), n.end(), '-', '_');
    if (n == "all") return kAll;
    for (Suite s : kAll)
        if (to_string(s) == n) return {s};
    throw std::invalid_argument("unknown suite '" + name +
                                "'; valid: racah, heun-racah, bannai-ito, heun-bi, upsilon, all");
}

std::vector<Suite> configured_suites(const Config& cfg) {
    if (cfg.suites.empty()) return kAll;
    std::vector<Suite> out;
    for (Suite s : kAll) {
        const auto it = cfg.suites.find(to_string(s));
        if (it != cfg.suites.end() && it->second) out.push_back(s);
    }
    return out;
}

CheckReport run(const Config& cfg, const std::vector<Suite>& suites) {
    std::vector<Planned> tasks;
    for (Suite s : suites) {
        auto p = plan(cfg, s);
        tasks.insert(tasks.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    std::vector<CheckReport> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i].task();
            } catch (const std::exception& e) {
                CheckReport err("run");
                err.add("trial_error", "run", Category::structural, false, e.what());
                results[i] = err;
            }
            results[i].set_trial(tasks[i].trial);
        }
    };
    const std::size_t n_threads =
        std::max<std::size_t>(1, std::min<std::size_t>(tasks.size(), std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    CheckReport out("all");
    for (const auto& r : results) out.append(r);
    out.sort();
    return out;
}

int exit_code(const CheckReport& report) {
    bool claim = false;
    for (const auto& e : report.entries()) {
        if (e.verdict != Verdict::fail) continue;
        if (e.category != Category::paper_claim) return 1;
        claim = true;
    }
    return claim ? 2 : 0;
}

std::string report_json(const CheckReport& report, const Config& cfg, const std::vector<Suite>& suites) {
    std::vector<std::string> labels;
    for (Suite s : suites) labels.push_back(to_string(s));
    return report_json(report, cfg, "verify", labels);
}

std::string report_json(const CheckReport& report, const Config& cfg, const std::string& command,
                        const std::vector<std::string>& labels) {
    using nlohmann::ordered_json;
    auto pairs = [](const NamedValues& v) {
        ordered_json a = ordered_json::array();
        for (const auto& [k, val] : v) a.push_back({{"name", k}, {"value", val}});
        return a;
    };
    ordered_json j;
    j["command"] = command;
    j["seed"] = cfg.sampling.seed;
    j["trials"] = cfg.sampling.trials;
    j["suites"] = labels;
    ordered_json summary;
    for (Category c : {Category::structural, Category::oracle, Category::paper_claim}) {
        ordered_json row;
        for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::skipped})
            row[std::string(heunalg::to_string(v))] = report.count(c, v);
        summary[std::string(heunalg::to_string(c))] = row;
    }
    j["summary"] = summary;
    j["exit_code"] = exit_code(report);
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries()) {
        ordered_json o;
        o["suite"] = e.suite;
        o["check"] = e.check;
        o["anchor"] = e.anchor;
        o["category"] = std::string(heunalg::to_string(e.category));
        o["verdict"] = std::string(heunalg::to_string(e.verdict));
        o["trial"] = e.trial;
        if (!e.detail.empty()) o["detail"] = e.detail;
        if (!e.witness.empty()) o["witness"] = pairs(e.witness);
        if (!e.fitted_constants.empty()) o["fitted_constants"] = pairs(e.fitted_constants);
        entries.push_back(o);
    }
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

}  // namespace heunalg::cli
