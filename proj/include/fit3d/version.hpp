#pragma once

#include <string_view>

namespace fit3d {

inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace fit3d
