#pragma once

namespace gdns {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gdns
