#pragma once

#include <numbers>

namespace augtwist {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// Degrees to radians. Every degree literal in the library goes through here.
constexpr double deg(double degrees) { return degrees * kPi / 180.0; }

/// Wraps an angle into (−π, π]. +π and −π both map to +π.
double wrap_angle(double a);

/// Signed difference a − b measured on the circle, in (−π, π].
double angle_gap(double a, double b);

/// Maps a fold angle through a tangent-half-angle law:
/// returns y with tan(y/2) = coeff · tan(x/2), continuous at x = ±π
/// (where y = ±π · sign(coeff)) and never evaluating tan(π/2).
double half_tan_map(double coeff, double x);

/// Inverse of half_tan_map for the same coefficient (coeff ≠ 0).
double half_tan_unmap(double coeff, double y);

}  // namespace augtwist
