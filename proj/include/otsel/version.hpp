#pragma once

namespace otsel {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace otsel
