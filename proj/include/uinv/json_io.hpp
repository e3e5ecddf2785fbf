#pragma once

#include <json.hpp>

#include "uinv/affine_map.hpp"
#include "uinv/verify.hpp"

namespace uinv {

/// {"n": ..., "matrix": [["a/b", ...]], "translation": ["a/b", ...]};
/// rationals travel as strings to stay exact.
nlohmann::json map_to_json(const UnipotentAffineMap& map);
UnipotentAffineMap map_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& rep);

}  // namespace uinv
