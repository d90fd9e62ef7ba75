#include "augtwist/degree4.hpp"

#include <cmath>
#include <stdexcept>

#include "augtwist/angle.hpp"
#include "augtwist/constants.hpp"

namespace augtwist {

D4Vertex D4Vertex::make(double alpha, double beta, double frame) {
  if (!(alpha > 0.0 && alpha < beta && alpha + beta < kPi))
    throw std::invalid_argument("D4Vertex: need 0 < alpha < beta and alpha + beta < pi");
  D4Vertex v;
  v.alpha = alpha;
  v.beta = beta;
  v.directions = {frame, frame + kPi - beta, frame + kPi - beta + alpha, frame + kPi + alpha};
  return v;
}

std::array<double, 4> D4Vertex::sectors() const {
  return {kPi - beta, alpha, beta, kPi - alpha};
}

double coefficient(double alpha, double beta) {
  const double den = std::cos(0.5 * (alpha - beta));
  if (std::abs(den) < 1e-15) throw std::invalid_argument("coefficient: degenerate sector angles");
  return std::cos(0.5 * (alpha + beta)) / den;
}

double mode2_coefficient(double alpha, double beta) {
  const double den = std::sin(0.5 * (alpha + beta));
  if (std::abs(den) < 1e-15) throw std::invalid_argument("mode2_coefficient: degenerate sector angles");
  return std::sin(0.5 * (alpha - beta)) / den;
}

double partner_angle(const D4Vertex& v, double rho_in, Mode mode, Given given) {
  if (mode == Mode::One) {
    const double c = coefficient(v.alpha, v.beta);
    return given == Given::Rho2 ? half_tan_map(c, rho_in) : half_tan_unmap(c, rho_in);
  }
  const double c = mode2_coefficient(v.alpha, v.beta);
  return given == Given::Rho1 ? half_tan_map(c, rho_in) : half_tan_unmap(c, rho_in);
}

std::array<double, 4> full_vertex_state(const D4Vertex& v, double rho2, Mode mode) {
  const double rho1 = partner_angle(v, rho2, mode, Given::Rho2);
  if (mode == Mode::One) return {rho1, rho2, -rho1, rho2};
  return {rho1, rho2, rho1, -rho2};
}

Mat3 vertex_product(const D4Vertex& v, const std::array<double, 4>& angles) {
  Mat3 m = Mat3::identity();
  for (int i = 0; i < 4; ++i) m = m * fold_about_planar_crease(v.directions[i], angles[i]);
  return m;
}

double closure_error(const D4Vertex& v, const std::array<double, 4>& angles) {
  return max_abs_diff(vertex_product(v, angles), Mat3::identity());
}

const D4Vertex& twist_v1() {
  static const D4Vertex v = D4Vertex::make(geometry::kAlpha, geometry::kBeta, geometry::kFrameV1);
  return v;
}

const D4Vertex& twist_v2() {
  static const D4Vertex v = D4Vertex::make(geometry::kAlpha, geometry::kBeta, geometry::kFrameV2);
  return v;
}

}  // namespace augtwist
