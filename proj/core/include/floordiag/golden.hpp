#pragma once

// Reference tables compiled into the library from the JSON files in data/.

#include <string_view>
#include <vector>

namespace floordiag {

// Names: "gw_table", "severi_table", "relative_d3", "max_tangency", "small_diagrams".
std::vector<std::string_view> golden_table_names();
// Raw JSON text; throws DomainError for an unknown name.
std::string_view golden_table(std::string_view name);

}  // namespace floordiag
