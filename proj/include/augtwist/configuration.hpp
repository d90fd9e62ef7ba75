#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "augtwist/degree5.hpp"
#include "augtwist/loopsolver.hpp"

namespace augtwist {

/// The thirteen creases, in CSV column order (after u1's own column).
enum class Crease : std::size_t {
  U1, U2, Phi1, Phi2, Psi1, Psi2, Zeta, Kappa1, Kappa2, O1a, O1b, O2a, O2b
};

inline constexpr std::size_t kCreaseCount = 13;

/// Column names: u1,u2,phi1,phi2,psi1,psi2,zeta,kappa1,kappa2,o1a,o1b,o2a,o2b.
std::string_view crease_name(Crease c);
const std::array<std::string_view, kCreaseCount>& crease_names();

/// Fold angles of every crease.
struct Configuration {
  std::array<double, kCreaseCount> angles{};

  double operator[](Crease c) const { return angles[static_cast<std::size_t>(c)]; }
  double& operator[](Crease c) { return angles[static_cast<std::size_t>(c)]; }

  /// v1: (u2, u1, o1a, o1b); v2: (φ1, φ2, o2a, o2b).
  std::array<double, 4> v1_angles() const;
  std::array<double, 4> v2_angles() const;
  /// v3: cw u1, ccw φ1; v4: cw φ2, ccw u2.
  D5State v3_state() const;
  D5State v4_state() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Closure errors at v1, v2, v3, v4.
std::array<double, 4> closure_residuals(const Configuration& c);
double max_closure(const Configuration& c);

/// Worst deviation from the degree-4 relations of the given case at v1 and
/// v2: the tangent-half-angle law and the mode's sign pattern.
double mode_relation_error(const Configuration& c, const CaseSpec& cs);

/// Max-norm distance on the circle.
double config_distance(const Configuration& a, const Configuration& b);

/// Largest |angle|, on the circle.
double max_norm(const Configuration& c);

/// Image under the half turn about the centre of the square, which swaps
/// v1↔v2 and v3↔v4. Maps a case (m1, m2) state to a case (m2, m1) state.
Configuration half_turn(const Configuration& c);

/// Sign patterns at a degree-4 vertex from its (ρ1, ρ2).
std::array<double, 4> d4_pattern(double rho1, double rho2, Mode mode);

}  // namespace augtwist
