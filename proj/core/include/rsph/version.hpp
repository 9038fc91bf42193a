#pragma once

namespace rsph {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rsph
