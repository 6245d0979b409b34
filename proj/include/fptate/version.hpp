#pragma once

namespace fptate {

inline constexpr const char* k_version = "0.1.0";
inline constexpr const char* k_tool_name = "fptate";

} // namespace fptate
