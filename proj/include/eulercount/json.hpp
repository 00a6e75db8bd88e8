#pragma once

#include <nlohmann/json.hpp>

#include "eulercount/calibrate.hpp"

namespace eulercount {

// {radius, b, type0, type1, type3, other, c, b_corrected, method, length, width}
void to_json(nlohmann::json& j, const CalibrationResult& result);
void from_json(const nlohmann::json& j, CalibrationResult& result);

}  // namespace eulercount
