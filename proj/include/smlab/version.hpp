#pragma once

namespace smlab {
inline constexpr const char* kVersion = "0.1.0";
}
