#pragma once

namespace salock {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace salock
