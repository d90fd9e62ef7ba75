#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "augtwist/rotation3d.hpp"

namespace augtwist {

/// Sign choice for the ψ solution (ψ = +a or −a), or for the two roots of
/// the inverse solve.
enum class Branch { Plus, Minus };

constexpr double sign_of(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

/// A degree-5 vertex of the twist. In its own frame the creases are:
/// counter-clockwise side 0°, ψ 45°, κ (cut) 135°, clockwise side 270°,
/// ζ 315°. `frame` rotates that layout into the pattern frame.
struct D5Vertex {
  std::string_view id;
  double frame = 0.0;

  /// Rays in counter-clockwise order: ccw side, ψ, κ, cw side, ζ.
  std::array<double, 5> rays() const;
};

const D5Vertex& twist_v3();  ///< cw side u1, ccw side φ1
const D5Vertex& twist_v4();  ///< cw side φ2, ccw side u2

/// Fold angles at a degree-5 vertex, named by role.
struct D5State {
  double cw_side = 0.0;   ///< independent side crease (u1 at v3)
  double zeta = 0.0;
  double ccw_side = 0.0;  ///< dependent side crease (φ1 at v3)
  double psi = 0.0;
  double kappa = 0.0;

  /// Angles in the order of D5Vertex::rays().
  std::array<double, 5> in_ray_order() const { return {ccw_side, psi, kappa, cw_side, zeta}; }
};

/// Right-hand side of the cos ψ relation, unclamped:
/// ½(1 − cos ζ + cos u (1 + cos ζ) − √2 sin u sin ζ).
double psi_cosine(double u, double zeta);

/// Images of the cut point along the clockwise chain (through ζ, then u)
/// and along the counter-clockwise chain (through φ, then ψ).
Vec3 cut_image_cw(double u, double zeta);
Vec3 cut_image_ccw(double phi, double psi);

/// ψ for the given branch; empty when (u, ζ) admits no rigid state.
/// The cosine is clamped into [−1, 1] when it overshoots by at most 1e−9.
std::optional<double> psi_from(double u, double zeta, Branch branch);
std::optional<double> phi_from(double u, double zeta, Branch branch);
std::optional<double> kappa_from(double u, double zeta, Branch branch);

/// All dependent angles from the clockwise side and ζ.
std::optional<D5State> solve_forward(double u, double zeta, Branch branch);

/// All dependent angles from the counter-clockwise side and ζ. The two
/// solutions for the clockwise side are the ± of one arccos.
std::optional<D5State> solve_reverse(double ccw_side, double zeta, Branch branch);

/// ψ and κ for known side creases and ζ. Exact when the three are
/// consistent; otherwise the closure error measures the inconsistency.
D5State complete_from_sides(double cw_side, double zeta, double ccw_side);

/// True when the two ψ branches coincide (cos ψ = ±1 within tol).
bool branch_degenerate(double u, double zeta, double tol = 1e-9);

/// Distance between the two images of the cut point; κ does not enter.
double vertex_residual(const D5State& s);

/// Product of the five crease rotations in counter-clockwise order.
Mat3 vertex_product(const D5Vertex& v, const D5State& s);

/// ‖product − I‖∞.
double closure_error(const D5Vertex& v, const D5State& s);

}  // namespace augtwist
