#pragma once

namespace entroq {

inline constexpr const char* version = "1.0.0";

}  // namespace entroq
