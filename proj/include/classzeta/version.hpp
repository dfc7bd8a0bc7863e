#pragma once

namespace classzeta {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace classzeta
