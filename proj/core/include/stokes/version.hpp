#pragma once

namespace stokes {

inline constexpr const char* tool_name = "stokes-squeeze";
inline constexpr const char* version_string = "1.0.0";

}  // namespace stokes
