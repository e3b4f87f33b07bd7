#pragma once

#include <string>

#include "twoclose/orbital.hpp"
#include "twoclose/perm_group.hpp"

namespace twoclose {

/// Group JSON: {"name": optional string, "degree": n,
///              "generators": [[0-based image list], ...]}.
std::string group_to_json(const perm_group& g);
perm_group group_from_json(const std::string& json_text,
                           std::size_t element_cap = default_element_cap);

void write_group_file(const perm_group& g, const std::string& path);
perm_group read_group_file(const std::string& path,
                           std::size_t element_cap = default_element_cap);

/// Coloring JSON: {"degree": n, "colors": [[row ids]]}.
std::string coloring_to_json(const orbital_coloring& coloring);

} // namespace twoclose
