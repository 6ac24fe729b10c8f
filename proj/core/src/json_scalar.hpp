#pragma once

#include <string>

#include <json.hpp>

#include "hopf_forge/cyclofield.hpp"

namespace hopf_forge::detail {

CycNumber scalar_from_json(const nlohmann::json& j, int order, const std::string& where);
nlohmann::ordered_json scalar_to_json(const CycNumber& x);
/// scalar_to_json(x).dump()
std::string scalar_text(const CycNumber& x);

}  // namespace hopf_forge::detail
