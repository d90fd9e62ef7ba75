#pragma once

#include <array>
#include <span>

namespace augtwist {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(Vec3, Vec3) = default;

  double norm() const;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// 3×3 matrix, row-major. Acts on column vectors by left multiplication,
/// so in A·B·v the factor B is applied first.
class Mat3 {
 public:
  constexpr Mat3() = default;
  constexpr explicit Mat3(const std::array<double, 9>& rows) : m_(rows) {}

  static constexpr Mat3 identity() { return Mat3({1, 0, 0, 0, 1, 0, 0, 0, 1}); }

  constexpr double operator()(int r, int c) const { return m_[3 * r + c]; }
  constexpr double& operator()(int r, int c) { return m_[3 * r + c]; }

  Mat3 transpose() const;
  double determinant() const;

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Vec3 operator*(const Mat3& a, Vec3 v);
  friend bool operator==(const Mat3&, const Mat3&) = default;

 private:
  std::array<double, 9> m_{};
};

Mat3 rot_x(double theta);
Mat3 rot_z(double theta);

/// Rotation by `angle` about the unit vector `axis` (Rodrigues).
Mat3 rotation_about(Vec3 axis, double angle);

/// Fold about a crease ray lying in the xy-plane at planar angle
/// `direction` from +x: rot_z(direction) · rot_x(rho) · rot_z(−direction).
/// The sector counter-clockwise of the ray turns by +rho about the ray.
Mat3 fold_about_planar_crease(double direction, double rho);

/// Product of a chain given in application order: chain[0] is applied first
/// (it is the rightmost factor). Throws std::invalid_argument when empty.
Mat3 compose(std::span<const Mat3> chain);

/// ‖a − b‖∞ over all entries.
double max_abs_diff(const Mat3& a, const Mat3& b);

/// ‖MᵀM − I‖∞.
double orthogonality_error(const Mat3& m);

/// Axial part of a near-identity rotation, ½(M32−M23, M13−M31, M21−M12).
/// Vanishes iff M = I for rotations with angle < π.
Vec3 axial_residual(const Mat3& m);

}  // namespace augtwist
