#pragma once

namespace pseudofield {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace pseudofield
