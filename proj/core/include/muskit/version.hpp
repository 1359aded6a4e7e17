#pragma once

namespace muskit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace muskit
