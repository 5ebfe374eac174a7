#pragma once

namespace zpf {
inline constexpr const char* kVersion = "0.1.0";
}
