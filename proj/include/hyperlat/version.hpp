#pragma once

namespace hyperlat {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kCertSchema = "hyperlat-cert/1";

}  // namespace hyperlat
