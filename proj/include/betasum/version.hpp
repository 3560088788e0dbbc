#pragma once

namespace betasum {

inline constexpr const char* kVersion = "betasum 0.1.0";

}  // namespace betasum
