#pragma once

#include <string_view>

namespace qbos {

inline constexpr std::string_view kToolName = "qbos";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace qbos
