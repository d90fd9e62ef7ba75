#pragma once

#include <array>

#include "augtwist/rotation3d.hpp"

namespace augtwist {

/// Folding mode of a flat-foldable degree-4 vertex.
/// Mode1: ρ1 = −ρ3, ρ2 = ρ4.  Mode2: ρ1 = ρ3, ρ2 = −ρ4.
enum class Mode { One = 1, Two = 2 };

/// Flat-foldable degree-4 vertex. Creases ρ1..ρ4 in counter-clockwise order;
/// the sector between ρ2 and ρ3 is alpha, between ρ3 and ρ4 is beta, and
/// the remaining two are their supplements.
struct D4Vertex {
  double alpha = 0.0;
  double beta = 0.0;
  std::array<double, 4> directions{};

  /// Builds the layout with ρ1 at planar angle `frame`. Throws
  /// std::invalid_argument unless 0 < alpha < beta and alpha + beta < π.
  static D4Vertex make(double alpha, double beta, double frame = 0.0);

  /// Sector angles (ρ1→ρ2, ρ2→ρ3, ρ3→ρ4, ρ4→ρ1).
  std::array<double, 4> sectors() const;
};

/// Which fold angle of the (ρ1, ρ2) pair is given.
enum class Given { Rho1, Rho2 };

/// Mode-1 ratio tan(ρ1/2) / tan(ρ2/2) = cos((α+β)/2) / cos((α−β)/2).
/// Throws std::invalid_argument when cos((α−β)/2) vanishes.
double coefficient(double alpha, double beta);

/// Mode-2 ratio tan(ρ2/2) / tan(ρ1/2) = sin((α−β)/2) / sin((α+β)/2).
double mode2_coefficient(double alpha, double beta);

/// The other angle of the (ρ1, ρ2) pair. Exact at ±π.
double partner_angle(const D4Vertex& v, double rho_in, Mode mode, Given given);

/// All four fold angles driven by ρ2, with the mode's sign pattern applied
/// exactly.
std::array<double, 4> full_vertex_state(const D4Vertex& v, double rho2, Mode mode);

/// Product of the four crease rotations in counter-clockwise order.
Mat3 vertex_product(const D4Vertex& v, const std::array<double, 4>& angles);

/// ‖product − I‖∞.
double closure_error(const D4Vertex& v, const std::array<double, 4>& angles);

/// The twist's v1 / v2 layouts in the pattern frame.
const D4Vertex& twist_v1();
const D4Vertex& twist_v2();

}  // namespace augtwist
