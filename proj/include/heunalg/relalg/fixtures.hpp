#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heunalg/relalg/ast.hpp"

namespace heunalg::relalg {

/// Names of the shipped presentations: racah, reduced_racah, equitable_racah, heun_racah,
/// bannai_ito, racah_in_bi, heun_bi, bi_graded_jacobi.
const std::vector<std::string>& fixture_names();

/// Source text of a shipped presentation; throws std::out_of_range for an unknown name.
std::string_view fixture_source(std::string_view name);

Presentation fixture(std::string_view name);

/// The presentation restricted to the listed relations (0-based).
Presentation select_relations(const Presentation& pres, const std::vector<std::size_t>& indices);

}  // namespace heunalg::relalg
