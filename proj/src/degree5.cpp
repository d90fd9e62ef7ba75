#include "augtwist/degree5.hpp"

#include <algorithm>
#include <cmath>

#include "augtwist/angle.hpp"
#include "augtwist/constants.hpp"

namespace augtwist {

namespace g = geometry;

namespace {

constexpr double kClampSlack = 1e-9;

Mat3 cw_chain(double u, double zeta) {
  return fold_about_planar_crease(g::kZetaRay, -zeta) * fold_about_planar_crease(g::kCwSideRay, -u);
}

Mat3 ccw_chain(double phi, double psi) {
  return fold_about_planar_crease(g::kCcwSideRay, phi) * fold_about_planar_crease(g::kPsiRay, psi);
}

Vec3 planar_unit(double angle) { return {std::cos(angle), std::sin(angle), 0.0}; }

// κ is the fold carrying the ψ–κ sector onto the κ–cw sector.
double kappa_between(double u, double zeta, double phi, double psi) {
  const Mat3 m = ccw_chain(phi, psi).transpose() * cw_chain(u, zeta);
  const Vec3 mz = m * Vec3{0.0, 0.0, 1.0};
  const double s = mz.x * std::sin(g::kKappaRay) - mz.y * std::cos(g::kKappaRay);
  return std::atan2(s, mz.z);
}

// ψ such that rotating the cut point about the ψ ray reaches `target`.
double psi_towards(Vec3 target) {
  const Vec3 axis = planar_unit(g::kPsiRay);
  const Vec3 p = g::kCutPoint;
  return std::atan2(dot(target, cross(axis, p)), dot(target, p));
}

std::optional<double> clamped_cosine(double c) {
  if (c > 1.0 + kClampSlack || c < -1.0 - kClampSlack) return std::nullopt;
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace

std::array<double, 5> D5Vertex::rays() const {
  return {frame + g::kCcwSideRay, frame + g::kPsiRay, frame + g::kKappaRay, frame + g::kCwSideRay,
          frame + g::kZetaRay};
}

const D5Vertex& twist_v3() {
  static const D5Vertex v{"v3", g::kFrameV3};
  return v;
}

const D5Vertex& twist_v4() {
  static const D5Vertex v{"v4", g::kFrameV4};
  return v;
}

double psi_cosine(double u, double zeta) {
  return 0.5 * (1.0 - std::cos(zeta) + std::cos(u) * (1.0 + std::cos(zeta)) -
                kSqrt2 * std::sin(u) * std::sin(zeta));
}

Vec3 cut_image_cw(double u, double zeta) { return cw_chain(u, zeta) * g::kCutPoint; }

Vec3 cut_image_ccw(double phi, double psi) { return ccw_chain(phi, psi) * g::kCutPoint; }

std::optional<double> psi_from(double u, double zeta, Branch branch) {
  auto c = clamped_cosine(psi_cosine(u, zeta));
  if (!c) return std::nullopt;
  return sign_of(branch) * std::acos(*c);
}

std::optional<D5State> solve_forward(double u, double zeta, Branch branch) {
  auto psi = psi_from(u, zeta, branch);
  if (!psi) return std::nullopt;
  const Vec3 lhs = cut_image_cw(u, zeta);
  const Vec3 w = fold_about_planar_crease(g::kPsiRay, *psi) * g::kCutPoint;
  const double phi = wrap_angle(std::atan2(lhs.z, lhs.y) - std::atan2(w.z, w.y));
  return D5State{u, zeta, phi, *psi, kappa_between(u, zeta, phi, *psi)};
}

std::optional<double> phi_from(double u, double zeta, Branch branch) {
  auto s = solve_forward(u, zeta, branch);
  if (!s) return std::nullopt;
  return s->ccw_side;
}

std::optional<double> kappa_from(double u, double zeta, Branch branch) {
  auto s = solve_forward(u, zeta, branch);
  if (!s) return std::nullopt;
  return s->kappa;
}

std::optional<D5State> solve_reverse(double ccw_side, double zeta, Branch branch) {
  // The clockwise image, pulled back through φ, must be orthogonal to the ψ
  // ray (the ψ fold keeps the cut point in that plane). Rotating the cut
  // point by −u about the clockwise ray gives base + cos u·radial − sin u·tangent.
  const Vec3 axis = planar_unit(g::kCwSideRay);
  const Vec3 p = g::kCutPoint;
  const Vec3 base = dot(axis, p) * axis;
  const Vec3 radial = p - base;
  const Vec3 tangent = cross(axis, p);

  const Mat3 pull = fold_about_planar_crease(g::kCcwSideRay, -ccw_side) *
                    fold_about_planar_crease(g::kZetaRay, -zeta);
  const Vec3 normal = pull.transpose() * planar_unit(g::kPsiRay);

  const double a = dot(normal, radial);
  const double b = -dot(normal, tangent);
  const double c = dot(normal, base);
  const double amplitude = std::hypot(a, b);
  if (amplitude < 1e-300) return std::nullopt;
  auto x = clamped_cosine(-c / amplitude);
  if (!x) return std::nullopt;

  const double u = wrap_angle(std::atan2(b, a) + sign_of(branch) * std::acos(*x));
  return complete_from_sides(u, zeta, ccw_side);
}

D5State complete_from_sides(double cw_side, double zeta, double ccw_side) {
  const double psi =
      psi_towards(fold_about_planar_crease(g::kCcwSideRay, -ccw_side) * cut_image_cw(cw_side, zeta));
  return D5State{cw_side, zeta, ccw_side, psi, kappa_between(cw_side, zeta, ccw_side, psi)};
}

bool branch_degenerate(double u, double zeta, double tol) {
  return std::abs(1.0 - std::abs(psi_cosine(u, zeta))) <= tol;
}

double vertex_residual(const D5State& s) {
  return (cut_image_cw(s.cw_side, s.zeta) - cut_image_ccw(s.ccw_side, s.psi)).norm();
}

Mat3 vertex_product(const D5Vertex& v, const D5State& s) {
  const auto rays = v.rays();
  const auto angles = s.in_ray_order();
  Mat3 m = Mat3::identity();
  for (int i = 0; i < 5; ++i) m = m * fold_about_planar_crease(rays[i], angles[i]);
  return m;
}

double closure_error(const D5Vertex& v, const D5State& s) {
  return max_abs_diff(vertex_product(v, s), Mat3::identity());
}

}  // namespace augtwist
