#pragma once

namespace catwva {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace catwva
