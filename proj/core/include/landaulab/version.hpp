#pragma once

#define LANDAULAB_VERSION_MAJOR 0
#define LANDAULAB_VERSION_MINOR 1
#define LANDAULAB_VERSION_PATCH 0

namespace landaulab {

inline constexpr const char* version() { return "0.1.0"; }

}  // namespace landaulab
