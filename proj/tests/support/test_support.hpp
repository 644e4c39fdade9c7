#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "floordiag/diagram.hpp"
#include "floordiag/golden.hpp"
#include "oracles.hpp"

namespace testing {

inline floordiag::FloorDiagram fd(std::string_view text) { return floordiag::FloorDiagram::parse(text); }

inline floordiag::FloorDiagram fd(const oracle::Diagram& d) { return floordiag::FloorDiagram::parse(d.text()); }

inline floordiag::Partition part(std::string_view text) { return floordiag::Partition::parse(text); }

inline nlohmann::json golden(std::string_view name) { return nlohmann::json::parse(floordiag::golden_table(name)); }

inline floordiag::BigInt big(const std::string& decimal) { return floordiag::BigInt(decimal); }

// The genus-one degree-four diagram used throughout the examples.
inline constexpr const char* kQuartic = "d=4; edges=(1,2,1);(2,3,1);(2,3,1);(3,4,2)";
inline constexpr const char* kQuarticMarking = "F1 E1.2 F2 E2.3 E2.3 F3 E3.4:2 F4 S4 S3 S4 S4";

}  // namespace testing
