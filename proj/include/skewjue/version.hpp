#pragma once

namespace skewjue {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace skewjue
