#pragma once

namespace darb {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace darb
