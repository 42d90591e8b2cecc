#pragma once

namespace braceforge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace braceforge
