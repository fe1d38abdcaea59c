#pragma once

namespace covercount {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace covercount
