#pragma once

namespace esbss {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace esbss
