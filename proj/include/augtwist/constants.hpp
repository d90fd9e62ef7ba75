#pragma once

// Geometry of the augmented square twist, in one place. All planar
// directions are measured from +x in the frame where v3 sits at the origin,
// the φ1 crease runs along +x to v2 and the u1 crease along −y to v1.

#include "augtwist/angle.hpp"
#include "augtwist/rotation3d.hpp"

namespace augtwist::geometry {

/// Sector angles of the degree-4 vertices v1, v2 (smaller, then larger).
inline constexpr double kAlpha = deg(45.0);
inline constexpr double kBeta = deg(90.0);

/// tan(22.5°); the magnitude of both degree-4 tangent-half-angle ratios.
inline constexpr double kTwistRatio = kSqrt2 - 1.0;

/// Degree-5 crease rays in a vertex's own frame. The clockwise side crease,
/// ζ and the counter-clockwise side crease bound the central square.
inline constexpr double kCcwSideRay = deg(0.0);
inline constexpr double kPsiRay = deg(45.0);
inline constexpr double kKappaRay = deg(135.0);
inline constexpr double kCwSideRay = deg(270.0);
inline constexpr double kZetaRay = deg(315.0);

/// Balkcom cut point, on the κ ray. Both images in the cut-closure identity
/// are images of this point: the all-flat state must satisfy it.
inline constexpr Vec3 kCutPoint{-1.0, 1.0, 0.0};

/// Frame rotations of the four vertices relative to the canonical layouts.
/// The pattern is symmetric under a half turn about the square's centre,
/// which carries v1→v2 and v3→v4.
inline constexpr double kFrameV1 = deg(0.0);
inline constexpr double kFrameV2 = deg(180.0);
inline constexpr double kFrameV3 = deg(0.0);
inline constexpr double kFrameV4 = deg(180.0);

}  // namespace augtwist::geometry
