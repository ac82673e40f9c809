#pragma once

namespace hecke {

// Bumped whenever an algorithm change could alter exact outputs; part of the
// on-disk cache key so stale coefficients can never be replayed.
inline constexpr const char* kPipelineVersion = "1.0.0";

// JSON report schema tag.
inline constexpr const char* kSchemaVersion = "v1";

} // namespace hecke
