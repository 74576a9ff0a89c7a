#pragma once

#include <string_view>

namespace qmetrics {

inline constexpr std::string_view tool_version = "0.1.0";

/// Version of the JSON report layout; bumped on any key change.
inline constexpr int report_schema_version = 1;

}  // namespace qmetrics
