#pragma once

namespace citegraph {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace citegraph
