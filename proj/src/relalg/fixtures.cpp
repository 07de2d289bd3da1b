#include "heunalg/relalg/fixtures.hpp"

#include <stdexcept>
#include <utility>

#include "heunalg/relalg/parser.hpp"

namespace heunalg::relalg {

namespace detail {
extern const std::string_view fixture_racah;
extern const std::string_view fixture_reduced_racah;
extern const std::string_view fixture_equitable_racah;
extern const std::string_view fixture_heun_racah;
extern const std::string_view fixture_bannai_ito;
extern const std::string_view fixture_racah_in_bi;
extern const std::string_view fixture_heun_bi;
extern const std::string_view fixture_bi_graded_jacobi;
}  // namespace detail

namespace {

const std::vector<std::pair<std::string, std::string_view>>& table() {
    static const std::vector<std::pair<std::string, std::string_view>> t = {
        {"racah", detail::fixture_racah},
        {"reduced_racah", detail::fixture_reduced_racah},
        {"equitable_racah", detail::fixture_equitable_racah},
        {"heun_racah", detail::fixture_heun_racah},
        {"bannai_ito", detail::fixture_bannai_ito},
        {"racah_in_bi", detail::fixture_racah_in_bi},
        {"heun_bi", detail::fixture_heun_bi},
        {"bi_graded_jacobi", detail::fixture_bi_graded_jacobi},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, src] : table()) out.push_back(name);
        return out;
    }();
    return names;
}

std::string_view fixture_source(std::string_view name) {
    for (const auto& [n, src] : table())
        if (n == name) return src;
    throw std::out_of_range("no fixture named '" + std::string(name) + "'");
}

Presentation fixture(std::string_view name) { return parse(fixture_source(name)); }

Presentation select_relations(const Presentation& pres, const std::vector<std::size_t>& indices) {
    Presentation out = pres;
    out.relations.clear();
    for (std::size_t k : indices) out.relations.push_back(pres.relations.at(k));
    return out;
}

}  // namespace heunalg::relalg
