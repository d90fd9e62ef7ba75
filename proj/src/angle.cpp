#include "augtwist/angle.hpp"

#include <cmath>

namespace augtwist {

double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double angle_gap(double a, double b) { return wrap_angle(a - b); }

double half_tan_map(double coeff, double x) {
  // cos(x/2) >= 0 on [−π, π], so atan2 stays in the half-angle range.
  const double h = 0.5 * wrap_angle(x);
  return 2.0 * std::atan2(coeff * std::sin(h), std::cos(h));
}

double half_tan_unmap(double coeff, double y) {
  const double h = 0.5 * wrap_angle(y);
  const double s = coeff < 0.0 ? -1.0 : 1.0;
  return 2.0 * std::atan2(s * std::sin(h), std::abs(coeff) * std::cos(h));
}

}  // namespace augtwist
