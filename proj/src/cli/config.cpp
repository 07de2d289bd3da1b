#include "heunalg/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace heunalg::cli {

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string value;
    std::size_t line;
};

using Section = std::map<std::string, Entry>;

Rational rational(const Entry& e, const std::string& key) {
    try {
        return Rational::parse(e.value);
    } catch (const std::exception&) {
        throw ConfigError(e.line, "key '" + key + "' expects a rational p/q or integer, got '" + e.value + "'");
    }
}

long long integer(const Entry& e, const std::string& key) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(e.value, &used);
        if (used != e.value.size()) throw std::invalid_argument(e.value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(e.line, "key '" + key + "' expects an integer, got '" + e.value + "'");
    }
}

bool boolean(const Entry& e, const std::string& key) {
    if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no") return false;
    throw ConfigError(e.line, "key '" + key + "' expects true or false, got '" + e.value + "'");
}

const Entry& need(const Section& s, const std::string& key, const std::string& section, std::size_t header) {
    const auto it = s.find(key);
    if (it == s.end()) throw ConfigError(header, "section [" + section + "] is missing key '" + key + "'");
    return it->second;
}

TauParams tau_block(const Section& s, const std::string& prefix, const std::string& section, std::size_t header) {
    TauParams t;
    Rational* fields[] = {&t.tau0, &t.tau1, &t.tau2, &t.tau3, &t.tau4};
    for (int i = 0; i < 5; ++i) {
        const std::string key = prefix + std::to_string(i);
        *fields[i] = rational(need(s, key, section, header), key);
    }
    return t;
}

const std::map<std::string, std::set<std::string>>& allowed_keys() {
    static const std::map<std::string, std::set<std::string>> keys = {
        {"sampling",
         {"seed", "trials", "numerator_bound", "denominator_bound", "n_min", "n_max", "taus_per_set", "draws_per_grid"}},
        {"racah", {"alpha", "beta", "gamma", "delta", "N", "truncation"}},
        {"bi", {"rho1", "rho2", "r1", "r2", "N", "case", "i", "j", "anchor", "pairing"}},
        {"tau", {"tau0", "tau1", "tau2", "tau3", "tau4"}},
        {"upsilon",
         {"tau_hr_0", "tau_hr_1", "tau_hr_2", "tau_hr_3", "tau_hr_4", "tau_hb_0", "tau_hb_1", "tau_hb_2", "tau_hb_3",
          "tau_hb_4", "a1", "a2", "c1", "c2"}},
        {"suites", {"racah", "heun_racah", "bannai_ito", "heun_bi", "upsilon"}},
    };
    return keys;
}

RacahTruncation infer_truncation(const RacahParams& p) {
    const Rational target(-p.N - 1);
    if (p.alpha == target) return RacahTruncation::alpha;
    if (p.beta + p.delta == target) return RacahTruncation::beta_delta;
    if (p.gamma == target) return RacahTruncation::gamma;
    return RacahTruncation::alpha;
}

}  // namespace

Config parse_config(const std::string& text) {
    std::map<std::string, Section> sections;
    std::map<std::string, std::size_t> headers;
    std::string current;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string l = trim(raw.substr(0, raw.find('#')));
        if (l.empty()) continue;
        if (l.front() == '[') {
            if (l.back() != ']') throw ConfigError(line, "unterminated section header");
            current = trim(l.substr(1, l.size() - 2));
            if (current != "fit" && !allowed_keys().count(current))
                throw ConfigError(line, "unknown section [" + current + "]");
            if (headers.count(current)) throw ConfigError(line, "duplicate section [" + current + "]");
            headers[current] = line;
            sections[current];
            continue;
        }
        const auto eq = l.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
        if (current.empty()) throw ConfigError(line, "key outside of a section");
        const std::string key = trim(l.substr(0, eq));
        const std::string value = trim(l.substr(eq + 1));
        if (key.empty()) throw ConfigError(line, "empty key");
        if (value.empty()) throw ConfigError(line, "empty value for key '" + key + "'");
        if (current != "fit" && !allowed_keys().at(current).count(key))
            throw ConfigError(line, "unknown key '" + key + "' in section [" + current + "]");
        if (sections[current].count(key)) throw ConfigError(line, "duplicate key '" + key + "'");
        sections[current][key] = {value, line};
    }

    Config cfg;
    if (sections.count("sampling")) {
        const Section& s = sections["sampling"];
        SamplingConfig& c = cfg.sampling;
        auto get = [&](const char* key, int& field, long long lo) {
            const auto it = s.find(key);
            if (it == s.end()) return;
            const long long v = integer(it->second, key);
            if (v < lo || v > 1000000) throw ConfigError(it->second.line, std::string("key '") + key + "' out of range");
            field = static_cast<int>(v);
        };
        if (const auto it = s.find("seed"); it != s.end()) {
            try {
                std::size_t used = 0;
                c.seed = std::stoull(it->second.value, &used);
                if (used != it->second.value.size() || it->second.value.front() == '-')
                    throw std::invalid_argument("seed");
            } catch (const std::exception&) {
                throw ConfigError(it->second.line, "key 'seed' expects an unsigned integer");
            }
        }
        get("trials", c.trials, 0);
        get("numerator_bound", c.numerator_bound, 1);
        get("denominator_bound", c.denominator_bound, 1);
        get("n_min", c.n_min, 1);
        get("n_max", c.n_max, 1);
        get("taus_per_set", c.taus_per_set, 0);
        get("draws_per_grid", c.draws_per_grid, 0);
        if (c.n_min > c.n_max) throw ConfigError(headers["sampling"], "n_min exceeds n_max");
    }
    if (sections.count("racah")) {
        const Section& s = sections["racah"];
        const std::size_t h = headers["racah"];
        RacahParams p;
        p.alpha = rational(need(s, "alpha", "racah", h), "alpha");
        p.beta = rational(need(s, "beta", "racah", h), "beta");
        p.gamma = rational(need(s, "gamma", "racah", h), "gamma");
        p.delta = rational(need(s, "delta", "racah", h), "delta");
        p.N = static_cast<int>(integer(need(s, "N", "racah", h), "N"));
        if (const auto it = s.find("truncation"); it != s.end()) {
            try {
                p.truncation = parse_racah_truncation(it->second.value);
            } catch (const std::exception& e) {
                throw ConfigError(it->second.line, e.what());
            }
        } else {
            p.truncation = infer_truncation(p);
        }
        cfg.racah = p;
    }
    if (sections.count("bi")) {
        const Section& s = sections["bi"];
        const std::size_t h = headers["bi"];
        BIParams p;
        p.rho1 = rational(need(s, "rho1", "bi", h), "rho1");
        p.rho2 = rational(need(s, "rho2", "bi", h), "rho2");
        p.r1 = rational(need(s, "r1", "bi", h), "r1");
        p.r2 = rational(need(s, "r2", "bi", h), "r2");
        p.N = static_cast<int>(integer(need(s, "N", "bi", h), "N"));
        const Entry& kind = need(s, "case", "bi", h);
        if (kind.value == "odd_rho") p.spec.kind = BICase::odd_rho;
        else if (kind.value == "odd_r") p.spec.kind = BICase::odd_r;
        else if (kind.value == "even") p.spec.kind = BICase::even;
        else throw ConfigError(kind.line, "case must be odd_rho, odd_r or even, got '" + kind.value + "'");
        auto index = [&](const char* key, int& field) {
            const auto it = s.find(key);
            if (it == s.end()) return;
            const long long v = integer(it->second, key);
            if (v != 1 && v != 2) throw ConfigError(it->second.line, std::string("key '") + key + "' must be 1 or 2");
            field = static_cast<int>(v);
        };
        index("i", p.spec.i);
        index("j", p.spec.j);
        p.spec.anchor = p.spec.j;
        index("anchor", p.spec.anchor);
        if (const auto it = s.find("pairing"); it != s.end()) {
            if (it->second.value == "sum") p.spec.pairing = Pairing::sum;
            else if (it->second.value == "difference") p.spec.pairing = Pairing::difference;
            else throw ConfigError(it->second.line, "pairing must be sum or difference");
        }
        cfg.bi = p;
    }
    if (sections.count("tau")) cfg.tau = tau_block(sections["tau"], "tau", "tau", headers["tau"]);
    if (sections.count("upsilon")) {
        const Section& s = sections["upsilon"];
        const std::size_t h = headers["upsilon"];
        if (s.count("tau_hr_0")) cfg.upsilon.tau_hr = tau_block(s, "tau_hr_", "upsilon", h);
        if (s.count("tau_hb_0")) cfg.upsilon.tau_hb = tau_block(s, "tau_hb_", "upsilon", h);
        const std::pair<const char*, Rational*> overrides[] = {{"a1", &cfg.upsilon.choice.a1},
                                                               {"a2", &cfg.upsilon.choice.a2},
                                                               {"c1", &cfg.upsilon.choice.c1},
                                                               {"c2", &cfg.upsilon.choice.c2}};
        for (const auto& [key, field] : overrides)
            if (const auto it = s.find(key); it != s.end()) *field = rational(it->second, key);
    }
    if (sections.count("fit")) {
        for (const auto& [key, e] : sections["fit"]) {
            try {
                cfg.fit.scalars[key] = Rational::parse(e.value);
            } catch (const std::exception&) {
                cfg.fit.generators[key] = e.value;
            }
        }
    }
    if (sections.count("suites"))
        for (const auto& [key, e] : sections["suites"]) cfg.suites[key] = boolean(e, key);
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

}  // namespace heunalg::cli
