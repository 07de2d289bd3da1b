#include "heunalg/cli/commands.hpp"

#include <sstream>

#include "heunalg/bannai_ito.hpp"
#include "heunalg/heun_bi.hpp"
#include "heunalg/heun_racah.hpp"
#include "heunalg/racah.hpp"
#include "heunalg/relalg/parser.hpp"

namespace heunalg::cli {

namespace {

const std::vector<std::string> kRacahOps = {"X", "Y", "K3", "casimir", "R1", "R2", "R3", "V1", "V2", "V3", "P", "W_hr"};
const std::vector<std::string> kBIOps = {"Bt1", "Bt2", "B1", "B2", "B3", "A", "B", "C", "Gamma", "bi_P", "W_hbi"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
    for (const auto& x : v)
        if (x == s) return true;
    return false;
}

std::string valid_list() {
    std::string out;
    for (const auto& n : operator_names()) out += (out.empty() ? "" : ", ") + n;
    return out;
}

const RacahParams& need_racah(const Config& cfg, const std::string& name) {
    if (!cfg.racah) throw std::invalid_argument("operator '" + name + "' needs a [racah] section");
    return *cfg.racah;
}

const BIParams& need_bi(const Config& cfg, const std::string& name) {
    if (!cfg.bi) throw std::invalid_argument("operator '" + name + "' needs a [bi] section");
    return *cfg.bi;
}

const TauParams& need_tau(const Config& cfg, const std::string& name) {
    if (!cfg.tau) throw std::invalid_argument("operator '" + name + "' needs a [tau] section");
    return *cfg.tau;
}

Matrix racah_operator(const Config& cfg, const std::string& name) {
    const RacahRealization real = racah_realization(need_racah(cfg, name));
    if (name == "X") return real.X;
    if (name == "Y") return real.Y;
    if (name == "K3") return real.K3;
    if (name == "casimir") return casimir_racah(real).C;
    if (name == "W_hr") return algebraic_heun_racah(real, need_tau(cfg, name)).matrix;
    const ReducedRacah red = to_reduced(real);
    if (name == "R1") return red.R1;
    if (name == "R2") return red.R2;
    if (name == "R3") return red.R3;
    const EquitableRacah eq = to_equitable(red, real);
    if (name == "V1") return eq.V1;
    if (name == "V2") return eq.V2;
    if (name == "V3") return eq.V3;
    return eq.P;
}

Matrix bi_operator(const Config& cfg, const std::string& name) {
    const BIRealization real = bi_realization(need_bi(cfg, name));
    if (name == "Bt1") return real.Bt1;
    if (name == "Bt2") return real.Bt2;
    if (name == "B1") return real.B1;
    if (name == "B2") return real.B2;
    if (name == "B3") return real.B3;
    if (name == "W_hbi") return algebraic_heun_bi(real, need_tau(cfg, name)).matrix;
    const RacahInBI r = racah_in_bi(real);
    if (name == "A") return r.A;
    if (name == "B") return r.B;
    if (name == "C") return r.C;
    if (name == "Gamma") return r.Gamma;
    return r.P;
}

}  // namespace

const std::vector<std::string>& operator_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v = kRacahOps;
        v.insert(v.end(), kBIOps.begin(), kBIOps.end());
        v.push_back("racah_grid");
        v.push_back("bi_grid");
        return v;
    }();
    return names;
}

Matrix operator_matrix(const Config& cfg, const std::string& name) {
    if (contains(kRacahOps, name)) return racah_operator(cfg, name);
    if (contains(kBIOps, name)) return bi_operator(cfg, name);
    throw UnknownOperator("unknown operator '" + name + "'; valid names: " + valid_list());
}

std::string export_csv(const Config& cfg, const std::string& name) {
    if (name == "racah_grid") return grid_csv(racah_realization(need_racah(cfg, name)).grid.lambda);
    if (name == "bi_grid") return grid_csv(bi_realization(need_bi(cfg, name)).grid.x);
    return operator_matrix(cfg, name).to_csv();
}

Matrix parse_literal_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<Rational> r;
        std::stringstream es(row);
        std::string cell;
        while (std::getline(es, cell, ',')) r.push_back(Rational::parse(cell));
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw std::invalid_argument("literal matrix '" + text + "' is not square");
    if (rows.empty()) throw std::invalid_argument("empty literal matrix");
    return Matrix::from_rows(rows);
}

relalg::Assignment fit_assignment(const relalg::Presentation& pres, const Config& cfg) {
    relalg::Assignment asg;
    for (const auto& g : pres.generators) {
        std::string source = g;
        if (auto it = cfg.fit.generators.find(g); it != cfg.fit.generators.end())
            source = it->second;
        else if (g == "K1")
            source = "Y";
        else if (g == "K2")
            source = "X";
        if (source.find(',') != std::string::npos || source.find(';') != std::string::npos)
            asg.set(g, parse_literal_matrix(source));
        else
            asg.set(g, operator_matrix(cfg, source));
    }
    for (const auto& s : pres.scalars) {
        if (auto it = cfg.fit.scalars.find(s.name); it != cfg.fit.scalars.end())
            asg.set(s.name, it->second);
        else
            asg.set_unknown(s.name);
    }
    for (const auto& [name, _] : cfg.fit.scalars)
        if (!pres.is_scalar(name)) throw std::invalid_argument("[fit] names '" + name + "', not a scalar of the relations");
    for (const auto& [name, _] : cfg.fit.generators)
        if (!pres.is_generator(name))
            throw std::invalid_argument("[fit] names '" + name + "', not a generator of the relations");
    asg.validate(pres);
    return asg;
}

CheckReport fit_report(const relalg::Presentation& pres, const relalg::Assignment& asg) {
    CheckReport rep("fit");
    const relalg::FitResult fit = relalg::fit_constants(pres, asg);
    CheckEntry& e = rep.add("fit", "fit", Category::oracle, fit.solved());
    if (!fit.solved()) {
        e.detail = "no solution";
        e.witness = {{"relation", std::to_string(fit.witness_relation + 1)},
                     {"row", std::to_string(fit.witness_row)},
                     {"col", std::to_string(fit.witness_col)},
                     wv("certificate_value", fit.witness_value)};
        return rep;
    }
    e.fitted_constants = fit.named_values();
    if (fit.kind == SolveKind::unique) {
        e.detail = "unique";
    } else {
        e.detail = "underdetermined, " + std::to_string(fit.free_directions.size()) + " free directions";
        std::size_t k = 0;
        for (const auto& d : fit.free_direction_text()) e.witness.emplace_back("free_" + std::to_string(++k), d);
    }
    for (std::size_t r = 0; r < pres.relations.size(); ++r)
        rep.add("residual_" + std::to_string(r + 1), "fit", Category::oracle, fit.residual_zero[r],
                relalg::print(pres.relations[r]));
    return rep;
}

CheckReport upsilon_report(const Config& cfg) {
    if (!cfg.bi) throw std::invalid_argument("upsilon-fit needs a [bi] section");
    const auto hr = cfg.upsilon.tau_hr ? cfg.upsilon.tau_hr : cfg.tau;
    const auto hb = cfg.upsilon.tau_hb ? cfg.upsilon.tau_hb : cfg.tau;
    if (!hr || !hb) throw std::invalid_argument("upsilon-fit needs tau_hr_* and tau_hb_* in [upsilon], or a [tau] section");
    return fit_upsilon(bi_realization(*cfg.bi), *hr, *hb, cfg.upsilon.choice).report;
}

}  // namespace heunalg::cli
