#pragma once

namespace vseg {

inline constexpr const char* kVersion = "0.1.0";

// Bumped on any incompatible change to the checkpoint layout.
inline constexpr unsigned kCheckpointVersion = 1;
inline constexpr unsigned kProbMapVersion = 1;

}  // namespace vseg
