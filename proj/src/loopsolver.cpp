#include "augtwist/loopsolver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "augtwist/angle.hpp"
#include "augtwist/roots.hpp"

namespace augtwist {

CaseSpec CaseSpec::parse(std::string_view name) {
  if (name == "1") return {Mode::One, Mode::One};
  if (name == "2") return {Mode::Two, Mode::Two};
  if (name == "3a") return {Mode::One, Mode::Two};
  if (name == "3b") return {Mode::Two, Mode::One};
  throw std::invalid_argument("unknown case '" + std::string(name) + "' (expected 1, 2, 3a or 3b)");
}

std::vector<CaseSpec> CaseSpec::all() {
  return {parse("1"), parse("2"), parse("3a"), parse("3b")};
}

std::string CaseSpec::name() const {
  if (!mixed()) return v1 == Mode::One ? "1" : "2";
  return v1 == Mode::One ? "3a" : "3b";
}

std::string_view label_name(PointLabel label) {
  switch (label) {
    case PointLabel::A: return "A";
    case PointLabel::B: return "B";
    case PointLabel::C: return "C";
  }
  return "?";
}

std::vector<BranchPair> all_branch_pairs() {
  return {{Branch::Plus, Branch::Plus}, {Branch::Plus, Branch::Minus},
          {Branch::Minus, Branch::Plus}, {Branch::Minus, Branch::Minus}};
}

double u2_from_u1(double u1, Mode v1_mode) {
  return partner_angle(twist_v1(), u1, v1_mode, Given::Rho2);
}

double phi1_demanded(double phi2, Mode v2_mode) {
  return partner_angle(twist_v2(), phi2, v2_mode, Given::Rho2);
}

std::optional<LoopSides> loop_sides(double u1, double zeta, const CaseSpec& c, BranchPair b) {
  const double u2 = u2_from_u1(u1, c.v1);
  auto v3 = solve_forward(u1, zeta, b.v3);
  if (!v3) return std::nullopt;
  auto v4 = solve_reverse(u2, zeta, b.v4);
  if (!v4) return std::nullopt;
  return LoopSides{u2, v3->ccw_side, v4->cw_side};
}

std::optional<double> loop_residual(double u1, double zeta, const CaseSpec& c, BranchPair b) {
  auto s = loop_sides(u1, zeta, c, b);
  if (!s) return std::nullopt;
  return angle_gap(s->phi1, phi1_demanded(s->phi2, c.v2));
}

namespace {

LoopRoot make_root(double u1, double zeta, const CaseSpec& c, BranchPair b) {
  LoopRoot r;
  r.u1 = u1;
  r.zeta = zeta;
  r.branches = b;
  if (auto s = loop_sides(u1, zeta, c, b)) {
    r.phi1 = s->phi1;
    r.phi2 = s->phi2;
    r.residual = angle_gap(s->phi1, phi1_demanded(s->phi2, c.v2));
    r.branch_degenerate = branch_degenerate(u1, zeta) || branch_degenerate(s->phi2, zeta);
  }
  return r;
}

ScanOptions scan_options(int samples) {
  ScanOptions o;
  o.samples = samples;
  return o;
}

bool same_point(const LoopRoot& a, const LoopRoot& b, double tol) {
  return std::abs(a.zeta - b.zeta) < tol && std::abs(angle_gap(a.phi1, b.phi1)) < tol &&
         std::abs(angle_gap(a.phi2, b.phi2)) < tol;
}

}  // namespace

std::vector<LoopRoot> loop_roots_in_zeta(double u1, double lo, double hi, const CaseSpec& c, BranchPair b,
                                         int samples) {
  const PartialFn f = [&](double z) { return loop_residual(u1, z, c, b); };
  std::vector<LoopRoot> out;
  for (double z : scan_roots(f, lo, hi, scan_options(samples))) out.push_back(make_root(u1, z, c, b));
  return out;
}

std::vector<LoopRoot> loop_roots_in_u1(double zeta, double lo, double hi, const CaseSpec& c, BranchPair b,
                                       int samples) {
  const PartialFn f = [&](double u) { return loop_residual(u, zeta, c, b); };
  std::vector<LoopRoot> out;
  for (double u : scan_roots(f, lo, hi, scan_options(samples))) out.push_back(make_root(u, zeta, c, b));
  return out;
}

int IntersectionReport::count(PointLabel label) const {
  return static_cast<int>(
      std::count_if(points.begin(), points.end(), [&](const auto& p) { return p.label == label; }));
}

int expected_c_count(const CaseSpec& c) { return c.mixed() ? 2 : 1; }

bool is_complete(const IntersectionReport& r, const CaseSpec& c) {
  return r.anomalies.empty() && r.count(PointLabel::A) == 1 && r.count(PointLabel::B) == 1 &&
         r.count(PointLabel::C) == expected_c_count(c);
}

IntersectionReport find_intersections(double u1, const CaseSpec& c, const IntersectionOptions& opts) {
  std::vector<LoopRoot> roots;
  for (BranchPair b : all_branch_pairs()) {
    for (const LoopRoot& r : loop_roots_in_zeta(u1, -kPi, kPi, c, b, opts.samples)) {
      // ζ = −π and ζ = +π are the same fold.
      LoopRoot q = r;
      q.zeta = wrap_angle(q.zeta);
      const bool seen = std::any_of(roots.begin(), roots.end(),
                                    [&](const LoopRoot& o) { return same_point(o, q, opts.dedupe); });
      if (!seen) roots.push_back(q);
    }
  }

  const CurveLaws laws = curve_laws(c);
  const double a_y = laws.u2_line(u1);
  const double b_y = laws.b_line(u1);
  const double tol = opts.label_tolerance;
  auto near = [tol](double a, double b) { return std::abs(angle_gap(a, b)) < tol; };
  IntersectionReport report;
  for (const LoopRoot& r : roots) {
    if (std::abs(r.zeta) < tol) {
      report.points.push_back({PointLabel::C, r});
    } else if (near(r.phi1, a_y) && near(r.phi1, laws.a_curve(r.zeta))) {
      report.points.push_back({PointLabel::A, r});
    } else if (near(r.phi1, b_y) && near(r.phi1, laws.b_curve(r.zeta))) {
      report.points.push_back({PointLabel::B, r});
    } else {
      report.anomalies.push_back(r);
    }
  }
  std::sort(report.points.begin(), report.points.end(), [](const auto& a, const auto& b) {
    if (a.label != b.label) return a.label < b.label;
    if (a.root.zeta != b.root.zeta) return a.root.zeta < b.root.zeta;
    return a.root.phi1 < b.root.phi1;
  });
  return report;
}

double zeta_A_closed_form(double u1, const CaseSpec& c) {
  const double k = c.v1 == Mode::One ? kSqrt2 - 2.0 : kSqrt2 + 2.0;
  return half_tan_map(k, u1);
}

double zeta_B_closed_form(double u1) {
  // tan(ζ/2) = √2·cot(u1/2), with ζ → ±π as u1 → 0±.
  const double h = 0.5 * wrap_angle(u1);
  const double s = std::sin(h);
  return wrap_angle(2.0 * std::atan2(std::copysign(kSqrt2 * std::cos(h), s), std::abs(s)));
}

CurveLaws curve_laws(const CaseSpec& c) {
  CurveLaws laws;
  laws.a_curve = [](double zeta) { return half_tan_map(-kSqrt2 / 2.0, zeta); };
  const double k = c.v2 == Mode::One ? 2.0 - kSqrt2 : -(2.0 + kSqrt2);
  laws.b_curve = [k](double zeta) {
    const double h = 0.5 * wrap_angle(zeta);
    if (std::sin(h) == 0.0) return kPi;
    return 2.0 * std::atan(k * std::cos(h) / std::sin(h));
  };
  const Mode v1 = c.v1, v2 = c.v2;
  laws.u2_line = [v1](double u1) { return u2_from_u1(u1, v1); };
  laws.b_line = [v2](double u1) { return u2_from_u1(u1, v2); };
  return laws;
}

}  // namespace augtwist
