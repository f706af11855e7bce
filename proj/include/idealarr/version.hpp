#pragma once

namespace idealarr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace idealarr
