#pragma once

namespace kdf {

// Default tolerances. Every function that compares against one of these takes
// it as a trailing parameter so callers can override.
inline constexpr double kStructuralTol = 1e-12; // absolute, entrywise
inline constexpr double kNumericTol    = 1e-10; // identities, relative
inline constexpr double kSaturationTol = 1e-8;  // "bound is attained"

struct Tolerances {
    double structural = kStructuralTol;
    double numeric    = kNumericTol;
    double saturation = kSaturationTol;
};

} // namespace kdf
