#pragma once

namespace mlcif {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mlcif
