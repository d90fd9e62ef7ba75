#include "augtwist/rotation3d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace augtwist {

double Vec3::norm() const { return std::sqrt(dot(*this, *this)); }

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
  return t;
}

double Mat3::determinant() const {
  const Mat3& a = *this;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 p;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return p;
}

Vec3 operator*(const Mat3& a, Vec3 v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

Mat3 rot_x(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Mat3({1, 0, 0, 0, c, -s, 0, s, c});
}

Mat3 rot_z(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Mat3({c, -s, 0, s, c, 0, 0, 0, 1});
}

Mat3 rotation_about(Vec3 axis, double angle) {
  const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  const double x = axis.x, y = axis.y, z = axis.z;
  return Mat3({t * x * x + c, t * x * y - s * z, t * x * z + s * y,
               t * x * y + s * z, t * y * y + c, t * y * z - s * x,
               t * x * z - s * y, t * y * z + s * x, t * z * z + c});
}

Mat3 fold_about_planar_crease(double direction, double rho) {
  return rot_z(direction) * rot_x(rho) * rot_z(-direction);
}

Mat3 compose(std::span<const Mat3> chain) {
  if (chain.empty()) throw std::invalid_argument("compose: empty rotation chain");
  Mat3 product = chain.front();
  for (auto it = chain.begin() + 1; it != chain.end(); ++it) product = (*it) * product;
  return product;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double worst = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

double orthogonality_error(const Mat3& m) {
  return max_abs_diff(m.transpose() * m, Mat3::identity());
}

Vec3 axial_residual(const Mat3& m) {
  return {0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)), 0.5 * (m(1, 0) - m(0, 1))};
}

}  // namespace augtwist
