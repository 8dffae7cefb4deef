#pragma once

namespace flagkneser {
inline constexpr const char* kVersion = "0.1.0";
}
