#pragma once

namespace fatigue {

inline constexpr const char* version() { return "0.1.0"; }

}  // namespace fatigue
