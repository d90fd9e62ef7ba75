#include "augtwist/configuration.hpp"

#include <algorithm>
#include <cmath>

#include "augtwist/angle.hpp"
#include "augtwist/degree4.hpp"

namespace augtwist {

const std::array<std::string_view, kCreaseCount>& crease_names() {
  static const std::array<std::string_view, kCreaseCount> names = {
      "u1", "u2", "phi1", "phi2", "psi1", "psi2", "zeta", "kappa1", "kappa2", "o1a", "o1b", "o2a", "o2b"};
  return names;
}

std::string_view crease_name(Crease c) { return crease_names()[static_cast<std::size_t>(c)]; }

std::array<double, 4> Configuration::v1_angles() const {
  const auto& s = *this;
  return {s[Crease::U2], s[Crease::U1], s[Crease::O1a], s[Crease::O1b]};
}

std::array<double, 4> Configuration::v2_angles() const {
  const auto& s = *this;
  return {s[Crease::Phi1], s[Crease::Phi2], s[Crease::O2a], s[Crease::O2b]};
}

D5State Configuration::v3_state() const {
  const auto& s = *this;
  return {s[Crease::U1], s[Crease::Zeta], s[Crease::Phi1], s[Crease::Psi1], s[Crease::Kappa1]};
}

D5State Configuration::v4_state() const {
  const auto& s = *this;
  return {s[Crease::Phi2], s[Crease::Zeta], s[Crease::U2], s[Crease::Psi2], s[Crease::Kappa2]};
}

std::array<double, 4> closure_residuals(const Configuration& c) {
  return {closure_error(twist_v1(), c.v1_angles()), closure_error(twist_v2(), c.v2_angles()),
          closure_error(twist_v3(), c.v3_state()), closure_error(twist_v4(), c.v4_state())};
}

double max_closure(const Configuration& c) {
  const auto r = closure_residuals(c);
  return *std::max_element(r.begin(), r.end());
}

std::array<double, 4> d4_pattern(double rho1, double rho2, Mode mode) {
  if (mode == Mode::One) return {rho1, rho2, -rho1, rho2};
  return {rho1, rho2, rho1, -rho2};
}

namespace {

double d4_error(const std::array<double, 4>& a, const D4Vertex& v, Mode mode) {
  const double law = std::abs(angle_gap(a[0], partner_angle(v, a[1], mode, Given::Rho2)));
  const auto expect = d4_pattern(a[0], a[1], mode);
  double pattern = 0.0;
  for (int i = 2; i < 4; ++i) pattern = std::max(pattern, std::abs(angle_gap(a[i], expect[i])));
  return std::max(law, pattern);
}

}  // namespace

double mode_relation_error(const Configuration& c, const CaseSpec& cs) {
  return std::max(d4_error(c.v1_angles(), twist_v1(), cs.v1), d4_error(c.v2_angles(), twist_v2(), cs.v2));
}

double config_distance(const Configuration& a, const Configuration& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < kCreaseCount; ++i) d = std::max(d, std::abs(angle_gap(a.angles[i], b.angles[i])));
  return d;
}

double max_norm(const Configuration& c) { return config_distance(c, Configuration{}); }

Configuration half_turn(const Configuration& c) {
  Configuration r = c;
  auto swap = [&](Crease a, Crease b) {
    r[a] = c[b];
    r[b] = c[a];
  };
  swap(Crease::U1, Crease::Phi2);
  swap(Crease::U2, Crease::Phi1);
  swap(Crease::Psi1, Crease::Psi2);
  swap(Crease::Kappa1, Crease::Kappa2);
  swap(Crease::O1a, Crease::O2a);
  swap(Crease::O1b, Crease::O2b);
  return r;
}

}  // namespace augtwist
