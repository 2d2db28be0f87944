#pragma once

#define SPECINT_VERSION_MAJOR 1
#define SPECINT_VERSION_MINOR 0
#define SPECINT_VERSION_PATCH 0
#define SPECINT_VERSION "1.0.0"

namespace specint {
inline constexpr const char* version() { return SPECINT_VERSION; }
inline constexpr int schema_version = 1;
}  // namespace specint
