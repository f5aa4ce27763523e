#pragma once

namespace torusot {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace torusot
