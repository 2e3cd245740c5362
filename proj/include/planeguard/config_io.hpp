#pragma once

#include <string>

#include "planeguard/coalition.hpp"
#include "planeguard/geometry.hpp"

namespace planeguard {

struct LoadedConfig {
  GameConfig config;     // canonical frame
  CanonicalFrame frame;  // raw <-> canonical map
  TargetPlaneSpec plane; // raw parameters as given
};

/// Strict JSON config: {"K": [kx,ky,kz], "b": f, "pursuers": [[x,y,z],...],
/// "evader": [x,y,z]?}. Unknown fields are rejected; positions are converted
/// to the canonical frame on load.
LoadedConfig load_config(const std::string& path);
LoadedConfig parse_config(const std::string& json_text);

}  // namespace planeguard
