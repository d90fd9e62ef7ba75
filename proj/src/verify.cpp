#include "augtwist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "augtwist/configspace.hpp"
#include "augtwist/degree4.hpp"
#include "augtwist/degree5.hpp"
#include "augtwist/embedding.hpp"
#include "augtwist/loopsolver.hpp"
#include "augtwist/rotation3d.hpp"
#include "augtwist/trace_io.hpp"

namespace augtwist {

namespace {

class Suite {
 public:
  // Records max(errors) against tol. Pass iff worst <= tol.
  void bound(std::string name, double worst, double tol, std::string detail = {}) {
    out_.push_back({std::move(name), worst <= tol, worst, tol, std::move(detail)});
  }
  void expect(std::string name, bool ok, std::string detail = {}) {
    out_.push_back({std::move(name), ok, ok ? 0.0 : 1.0, 0.0, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::vector<CheckResult> out_;
};

std::vector<double> u1_grid(int n) {
  // Symmetric about 0, never hitting 0 or ±π.
  std::vector<double> u;
  for (int k = 0; k < n; ++k) u.push_back(-kPi + (k + 0.5) * 2.0 * kPi / n);
  return u;
}

void check_rotations(Suite& s, std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> ang(-kPi, kPi), coord(-2.0, 2.0);
  double ortho = 0, inv = 0, norm = 0;
  for (int i = 0; i < n; ++i) {
    const double theta = ang(rng), rho = ang(rng);
    const Mat3 m = fold_about_planar_crease(theta, rho);
    ortho = std::max({ortho, orthogonality_error(m), std::abs(m.determinant() - 1.0)});
    inv = std::max(inv, max_abs_diff(m * fold_about_planar_crease(theta, -rho), Mat3::identity()));
    const Vec3 v{coord(rng), coord(rng), coord(rng)};
    norm = std::max(norm, std::abs((m * v).norm() - v.norm()));
  }
  s.bound("rotation3d.proper_orthogonal", ortho, 1e-12);
  s.bound("rotation3d.fold_inverse", inv, 1e-12);
  s.bound("rotation3d.norm_preserving", norm, 1e-12);
}

void check_degree4(Suite& s, std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  double round = 0, closure = 0;
  bool pattern_exact = true;
  for (int i = 0; i < n; ++i) {
    const double x = ang(rng);
    for (const D4Vertex* v : {&twist_v1(), &twist_v2()}) {
      for (Mode m : {Mode::One, Mode::Two}) {
        const double y = partner_angle(*v, x, m, Given::Rho2);
        round = std::max(round, std::abs(angle_gap(partner_angle(*v, y, m, Given::Rho1), x)));
        const auto rho = full_vertex_state(*v, x, m);
        closure = std::max(closure, closure_error(*v, rho));
        if (m == Mode::One) pattern_exact &= rho[0] == -rho[2] && rho[1] == rho[3];
        else pattern_exact &= rho[0] == rho[2] && rho[1] == -rho[3];
      }
    }
  }
  s.bound("degree4.round_trip", round, 1e-12);
  s.bound("degree4.vertex_closure", closure, 1e-10);
  s.expect("degree4.sign_pattern_exact", pattern_exact);

  bool monotone = true;
  for (Mode m : {Mode::One, Mode::Two}) {
    int sign = 0;
    double prev = partner_angle(twist_v1(), -kPi + 1e-3, m, Given::Rho2);
    for (int k = 1; k <= 4000; ++k) {
      const double x = -kPi + 1e-3 + k * (2.0 * kPi - 2e-3) / 4000;
      const double y = partner_angle(twist_v1(), x, m, Given::Rho2);
      const int d = y > prev ? 1 : (y < prev ? -1 : 0);
      if (d == 0 || (sign != 0 && d != sign)) monotone = false;
      sign = d;
      prev = y;
    }
  }
  s.expect("degree4.strictly_monotone", monotone);
}

void check_degree5(Suite& s, std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  bool symmetric = true;
  double eq2 = 0, close3 = 0, close4 = 0;
  int feasible = 0;
  for (int i = 0; i < n; ++i) {
    const double u = ang(rng), z = ang(rng);
    auto p = psi_from(u, z, Branch::Plus);
    auto m = psi_from(u, z, Branch::Minus);
    if (p.has_value() != m.has_value() || (p && *m != -*p)) symmetric = false;
    if (p) {
      ++feasible;
      eq2 = std::max(eq2, std::abs(cut_image_cw(u, z).x - cut_image_ccw(0.0, *p).x));
      for (Branch b : {Branch::Plus, Branch::Minus}) {
        if (auto st = solve_forward(u, z, b)) close3 = std::max(close3, closure_error(twist_v3(), *st));
      }
    }
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      if (auto st = solve_reverse(u, z, b)) {
        close4 = std::max({close4, closure_error(twist_v4(), *st), vertex_residual(*st)});
      }
    }
  }
  s.expect("degree5.branch_symmetry_exact", symmetric);
  s.bound("degree5.cut_x_identity", eq2, 1e-10, std::to_string(feasible) + " feasible draws");
  s.bound("degree5.v3_closure", close3, 1e-10);
  s.bound("degree5.v4_closure", close4, 1e-10);

  // Near the unfolded state, ψ is continuous wherever it is real; the
  // branches meet on the |cos ψ| = 1 locus.
  const int g = 200;
  const double r = 0.1, h = 2.0 * r / g;
  double jump = 0;
  int degenerate = 0;
  for (int i = 0; i <= g; ++i) {
    for (int j = 0; j <= g; ++j) {
      const double u = -r + i * h, z = -r + j * h;
      if (branch_degenerate(u, z, 1e-6)) ++degenerate;
      auto a = psi_from(u, z, Branch::Plus);
      if (!a) continue;
      for (auto [du, dz] : {std::pair{h, 0.0}, std::pair{0.0, h}}) {
        if (auto b = psi_from(u + du, z + dz, Branch::Plus)) jump = std::max(jump, std::abs(*b - *a));
      }
    }
  }
  s.bound("degree5.continuous_near_origin", jump, 0.05, std::to_string(degenerate) + " branch-degenerate grid points");
}

void check_intersections(Suite& s, int n) {
  double a_law = 0, b_law = 0, b_zeta = 0, c_law = 0, lines = 0, d5 = 0, d4 = 0, b_min = kPi;
  int incomplete = 0;
  for (const CaseSpec& cs : CaseSpec::all()) {
    const CurveLaws laws = curve_laws(cs);
    for (double u1 : u1_grid(n)) {
      const IntersectionReport rep = find_intersections(u1, cs);
      if (!is_complete(rep, cs)) ++incomplete;
      for (const auto& p : rep.points) {
        const double z = p.root.zeta, y = p.root.phi1;
        switch (p.label) {
          case PointLabel::A:
            a_law = std::max(a_law, std::abs(angle_gap(z, zeta_A_closed_form(u1, cs))));
            lines = std::max(lines, std::abs(angle_gap(y, laws.u2_line(u1))));
            break;
          case PointLabel::B:
            b_law = std::max(b_law, std::abs(angle_gap(y, laws.b_curve(z))));
            b_zeta = std::max(b_zeta, std::abs(angle_gap(z, zeta_B_closed_form(u1))));
            lines = std::max(lines, std::abs(angle_gap(y, laws.b_line(u1))));
            b_min = std::min(b_min, std::max(std::abs(z), std::abs(y)));
            break;
          case PointLabel::C:
            c_law = std::max(c_law, std::abs(z));
            break;
        }
        const Configuration c = assemble(u1, z, cs, p.root.branches);
        d5 = std::max({d5, vertex_residual(c.v3_state()), vertex_residual(c.v4_state())});
        d4 = std::max(d4, mode_relation_error(c, cs));
      }
    }
  }
  s.bound("loopsolver.incomplete_reports", incomplete, 0);
  s.bound("loopsolver.A_zeta_law", a_law, 1e-8);
  s.bound("loopsolver.B_curve_law", b_law, 1e-8);
  s.bound("loopsolver.B_zeta_law", b_zeta, 1e-8);
  s.bound("loopsolver.C_on_zeta_zero", c_law, 1e-9);
  s.bound("loopsolver.A_B_on_lines", lines, 1e-8);
  s.bound("loopsolver.point_vertex_residual", d5, 1e-10);
  s.bound("loopsolver.point_degree4_relations", d4, 1e-12);
  s.bound("loopsolver.B_off_origin", -b_min, -0.5, "min max(|zeta|,|y|) = " + std::to_string(b_min));
}

struct Traced {
  std::vector<TraceCurve> curves;  ///< one per enumerated mode
  HybridTrace hybrid;

  std::vector<const TraceCurve*> every() const {
    std::vector<const TraceCurve*> all;
    for (const TraceCurve& t : curves) all.push_back(&t);
    all.push_back(&hybrid.curve);
    return all;
  }
};

Traced trace_everything(double step) {
  Traced t;
  for (const FoldingMode& m : enumerate_origin_modes()) {
    TraceCurve c = full_trace(m, step);
    if (m.track == Track::A && m.case_spec == CaseSpec::parse("1")) append_flat_opening(c, step);
    t.curves.push_back(std::move(c));
  }
  t.hybrid = hybrid_iso_area_trace(step);
  return t;
}

void check_traces(Suite& s, const Traced& tr, double step) {
  double closure = 0, relation = 0, jump = 0, phi_u2 = 0, zeta_law = 0;
  std::string stopped;
  for (const TraceCurve* tp : tr.every()) {
    const TraceCurve& t = *tp;
    const bool hybrid = tp == &tr.hybrid.curve;
    if (!t.stop_reason.empty()) stopped += t.mode.name() + ": " + t.stop_reason + "; ";
    const bool fold_line = t.mode.track == Track::FoldLine;
    for (std::size_t i = 0; i < t.samples.size(); ++i) {
      const Configuration& c = t.samples[i];
      closure = std::max(closure, max_closure(c));
      if (!fold_line) relation = std::max(relation, mode_relation_error(c, t.mode.case_spec));
      if (i) jump = std::max(jump, config_distance(c, t.samples[i - 1]));
    }
    if (t.mode.track != Track::A || hybrid) continue;
    const bool case1 = t.mode.case_spec == CaseSpec::parse("1");
    for (const Configuration& c : t.samples) {
      const double u1 = c[Crease::U1];
      if (std::abs(u1) >= kPi) continue;  // the flat opening at u1 = π leaves the A law
      if (case1) phi_u2 = std::max(phi_u2, std::abs(angle_gap(c[Crease::Phi1], c[Crease::U2])));
      zeta_law = std::max(zeta_law, std::abs(angle_gap(c[Crease::Zeta], zeta_A_closed_form(u1, t.mode.case_spec))));
    }
  }
  s.expect("configspace.traces_complete", stopped.empty(), stopped);
  s.bound("configspace.trace_closure", closure, 1e-9);
  s.bound("configspace.trace_degree4_relations", relation, 1e-12);
  s.bound("configspace.trace_continuity", jump, 5.0 * step);
  s.bound("configspace.case1_phi1_equals_u2", phi_u2, 1e-8);
  s.bound("configspace.A_trace_zeta_law", zeta_law, 1e-8);
}

void check_modes(Suite& s) {
  const auto a = enumerate_origin_modes();
  const auto b = enumerate_origin_modes();
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) {
    same = a[i].name() == b[i].name() && a[i].classification == b[i].classification;
  }
  s.expect("configspace.enumeration_deterministic", same);
  const auto nondeg = std::count_if(a.begin(), a.end(), [](const FoldingMode& m) {
    return m.classification == Classification::NonDegenerate;
  });
  s.expect("configspace.four_nondegenerate_modes", nondeg == 4, std::to_string(nondeg) + " found");
  bool c_degenerate = true, b_disconnected = true;
  for (const auto& m : a) {
    if (m.track == Track::C) c_degenerate &= m.classification == Classification::DegenerateZetaZero;
    if (m.track == Track::B) b_disconnected &= m.classification == Classification::DisconnectedFromOrigin;
  }
  s.expect("configspace.C_modes_degenerate", c_degenerate);
  s.expect("configspace.B_modes_disconnected", b_disconnected);
}

void check_dof(Suite& s, const Traced& tr) {
  int bad = 0, probes = 0;
  for (const TraceCurve& t : tr.curves) {
    if (t.mode.classification != Classification::NonDegenerate) continue;
    // Generic points: away from the unfolded and flat ends.
    std::vector<const Configuration*> inner;
    for (const Configuration& c : t.samples) {
      if (std::abs(c[Crease::U1]) > 0.05 && std::abs(c[Crease::U1]) < kPi - 0.05) inner.push_back(&c);
    }
    for (int k = 1; k <= 5 && !inner.empty(); ++k) {
      const Configuration& c = *inner[k * inner.size() / 6];
      ++probes;
      if (tangent_dof(c) != 1) ++bad;
    }
  }
  s.bound("configspace.generic_dof_one", bad, 0, std::to_string(probes) + " probes");
  s.expect("configspace.origin_singular", tangent_dof_report(Configuration{}).singular);
}

void check_embedding(Suite& s, const Traced& tr) {
  const CreasePattern pat = build_pattern();
  const double mismatch_tol = 1e-8 * pat.diameter;
  double rigidity = 0;
  int disagree = 0, checked = 0;
  for (const TraceCurve* tp : tr.every()) {
    const TraceCurve& t = *tp;
    for (std::size_t i = 0; i < t.samples.size(); i += 5) {
      for (int perturb = 0; perturb < 2; ++perturb) {
        Configuration c = t.samples[i];
        if (perturb) c[Crease::Phi1] += 0.05;
        const FoldedState st = embed(pat, c);
        const bool valid_embed = st.mismatch < mismatch_tol;
        const bool valid_closure = max_closure(c) < 1e-9;
        ++checked;
        if (valid_embed != valid_closure) ++disagree;
        if (perturb) continue;
        for (std::size_t f = 0; f < pat.faces.size(); ++f) {
          const auto& ids = pat.faces[f];
          const auto& q = st.face_corners[f];
          const std::size_t k = ids.size();
          for (std::size_t j = 0; j < k; ++j) {
            const Vec3 e0 = pat.vertices[ids[(j + 1) % k]] - pat.vertices[ids[j]];
            const Vec3 e1 = pat.vertices[ids[(j + 2) % k]] - pat.vertices[ids[(j + 1) % k]];
            const Vec3 f0 = q[(j + 1) % k] - q[j];
            const Vec3 f1 = q[(j + 2) % k] - q[(j + 1) % k];
            rigidity = std::max(rigidity, std::abs(f0.norm() - e0.norm()) / e0.norm());
            const double a0 = std::acos(std::clamp(dot(e0, e1) / (e0.norm() * e1.norm()), -1.0, 1.0));
            const double a1 = std::acos(std::clamp(dot(f0, f1) / (f0.norm() * f1.norm()), -1.0, 1.0));
            rigidity = std::max(rigidity, std::abs(a1 - a0) / a0);
          }
        }
      }
    }
  }
  s.bound("embedding.face_rigidity", rigidity, 1e-10);
  s.bound("embedding.closure_equivalence_disagreements", disagree, 0, std::to_string(checked) + " states");

  bool lossless = true;
  for (const TraceCurve* tp : tr.every()) {
    const TraceCurve& t = *tp;
    const TraceCurve back = parse_trace_json(trace_json(t));
    lossless &= back.samples == t.samples && back.mode.name() == t.mode.name() &&
                back.reaches_flat == t.reaches_flat && back.reaches_origin == t.reaches_origin;
  }
  s.expect("embedding.json_round_trip_exact", lossless);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const VerifyOptions& opts) {
  Suite s;
  std::mt19937_64 rng(opts.seed);
  check_rotations(s, rng, opts.random_samples);
  check_degree4(s, rng, opts.random_samples);
  check_degree5(s, rng, opts.random_samples);
  check_intersections(s, opts.u1_samples);
  const Traced tr = trace_everything(opts.step);
  check_traces(s, tr, opts.step);
  check_modes(s);
  check_dof(s, tr);
  check_embedding(s, tr);
  return s.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace augtwist
