#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "saenum/harness.hpp"

namespace sae {

/// Value of one config key: scalar or homogeneous array.
using TomlValue = std::variant<double, bool, std::string, std::vector<double>,
                               std::vector<std::string>>;

/// Section name -> key -> value. Parses the TOML subset the scenario files
/// use: [section] headers, scalar and array assignments, # comments.
using TomlTable = std::map<std::string, std::map<std::string, TomlValue>>;

TomlTable parse_toml(const std::string& text);
TomlTable parse_toml_file(const std::string& path);

/// Geometry from "mra6", "nested:n1,n2", "coprime:a,b" or an explicit
/// position list.
ArrayGeometry geometry_from_preset(const std::string& preset);

struct LoadedConfig {
    Scenario scenario;
    PipelineOptions options;
    bool has_sweep = false;
    Sweep sweep;  // valid when has_sweep
};

/// Loads [geometry], [sources], [noise], [band], [processing] and the
/// optional [sweep] section.
LoadedConfig load_config(const std::string& path);

}  // namespace sae
