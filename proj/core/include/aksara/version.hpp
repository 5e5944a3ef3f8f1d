#pragma once

namespace aksara {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace aksara
