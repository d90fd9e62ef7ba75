#include "augtwist/configspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "augtwist/degree4.hpp"
#include "augtwist/embedding.hpp"
#include "augtwist/roots.hpp"

namespace augtwist {

std::string_view track_name(Track t) {
  switch (t) {
    case Track::A: return "A";
    case Track::B: return "B";
    case Track::C: return "C";
    case Track::FoldLine: return "fold-line";
  }
  return "?";
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::NonDegenerate: return "NonDegenerate";
    case Classification::DegenerateZetaZero: return "DegenerateZetaZero";
    case Classification::DisconnectedFromOrigin: return "DisconnectedFromOrigin";
    case Classification::FoldInHalf: return "FoldInHalf";
  }
  return "?";
}

std::string FoldingMode::name() const {
  std::string s = track == Track::FoldLine ? "fold-line" : "case " + case_spec.name() + " " + std::string(track_name(track));
  if (track == Track::C && case_spec.mixed()) s += std::to_string(variant);
  s += direction > 0 ? "+" : "-";
  return s;
}

std::optional<Configuration> try_assemble(double u1, double zeta, const CaseSpec& c, BranchPair b, double tol) {
  auto v3 = solve_forward(u1, zeta, b.v3);
  if (!v3) return std::nullopt;
  const double u2 = u2_from_u1(u1, c.v1);
  const double phi1 = v3->ccw_side;
  const double phi2 = partner_angle(twist_v2(), phi1, c.v2, Given::Rho1);
  const D5State v4 = complete_from_sides(phi2, zeta, u2);
  const auto at_v1 = d4_pattern(u2, u1, c.v1);
  const auto at_v2 = d4_pattern(phi1, phi2, c.v2);

  Configuration cfg;
  cfg[Crease::U1] = u1;
  cfg[Crease::U2] = u2;
  cfg[Crease::Phi1] = phi1;
  cfg[Crease::Phi2] = phi2;
  cfg[Crease::Psi1] = v3->psi;
  cfg[Crease::Psi2] = v4.psi;
  cfg[Crease::Zeta] = zeta;
  cfg[Crease::Kappa1] = v3->kappa;
  cfg[Crease::Kappa2] = v4.kappa;
  cfg[Crease::O1a] = at_v1[2];
  cfg[Crease::O1b] = at_v1[3];
  cfg[Crease::O2a] = at_v2[2];
  cfg[Crease::O2b] = at_v2[3];
  if (!(max_closure(cfg) <= tol)) return std::nullopt;
  return cfg;
}

Configuration assemble(double u1, double zeta, const CaseSpec& c, BranchPair b, double tol) {
  if (auto cfg = try_assemble(u1, zeta, c, b, tol)) return *cfg;
  throw std::invalid_argument("assemble: (u1, zeta) is not a closed state of case " + c.name() +
                              " for this branch pair");
}

Configuration snap_flat(const Configuration& c) {
  Configuration s = c;
  for (double& a : s.angles) {
    const double w = wrap_angle(a);
    a = std::abs(w) < 0.5 * kPi ? 0.0 : kPi;
  }
  return s;
}

std::optional<LoopRoot> seed_root(const FoldingMode& m, double u1) {
  const IntersectionReport r = find_intersections(u1, m.case_spec);
  const PointLabel want = m.track == Track::A ? PointLabel::A : m.track == Track::B ? PointLabel::B : PointLabel::C;
  std::vector<LoopRoot> hits;
  for (const auto& p : r.points)
    if (p.label == want) hits.push_back(p.root);
  std::sort(hits.begin(), hits.end(), [](const LoopRoot& a, const LoopRoot& b) { return a.phi1 < b.phi1; });
  if (m.variant < 0 || m.variant >= static_cast<int>(hits.size())) return std::nullopt;
  return hits[m.variant];
}

namespace {

constexpr double kClosureTol = 1e-9;
constexpr double kSingularGap = 1e-9;   // how close marching gets to ±π
// Near the origin every residual is quadratic in the angles, so roots are
// resolved only to about sqrt(eps)·u1; marching stops at u1 = 1e−6.
constexpr double kOriginGap = 1e-6;
constexpr double kSnapRadius = 1e-3;
constexpr double kCloseReach = 1e-2;    // lost roots this close to a singular end may still close

bool is_singular_u1(double u) { return u == 0.0 || std::abs(u) == kPi; }

// Linear extrapolation of a configuration on the circle.
Configuration extrapolate(const Configuration& prev, const Configuration& last, double ratio) {
  Configuration p = last;
  for (std::size_t i = 0; i < kCreaseCount; ++i)
    p.angles[i] = last.angles[i] + ratio * angle_gap(last.angles[i], prev.angles[i]);
  return p;
}

struct Node {
  Configuration x;
  BranchPair b;
};

// Continuation in u1 with the max-norm change per sample held near `step`.
class Marcher {
 public:
  Marcher(const CaseSpec& cs, double step) : cs_(cs), step_(step) {}

  // Appends nodes from path.back() towards `target`; returns false with a
  // reason when the root is lost before getting there.
  // With a singular end, steps shrink geometrically towards it so the
  // linear predictor stays closer to the tracked root than to its neighbours.
  bool run(std::vector<Node>& path, double target, std::optional<double> singular_end,
           const std::vector<double>& stops, int max_nodes, std::string& reason) const {
    double h = step_;
    const double h_min = 1e-13;
    while (true) {
      const Node& last = path.back();
      const double u = last.x[Crease::U1];
      if (u == target) return true;
      if (static_cast<int>(path.size()) >= max_nodes) {
        reason = "sample limit reached";
        return false;
      }
      const double dir = target > u ? 1.0 : -1.0;
      double reach = std::min(h, std::abs(target - u));
      if (singular_end) reach = std::min(reach, std::max(0.5 * std::abs(*singular_end - u), kSingularGap));
      double next = u + dir * reach;
      for (double s : stops)
        if ((s - u) * dir > 0.0 && (next - s) * dir > 0.0) next = s;
      if (std::abs(next - target) < 1e-300 || (target - next) * dir < 0.0) next = target;

      auto node = step_to(path, next);
      if (node) {
        const double moved = config_distance(node->x, last.x);
        path.push_back(*node);
        if (moved < 0.5 * step_) h = std::min(2.0 * h, step_);
        continue;
      }
      h = 0.5 * std::abs(next - u);
      if (h < h_min) {
        reason = "root lost near u1 = " + std::to_string(u);
        return false;
      }
    }
  }

  std::optional<Node> step_to(const std::vector<Node>& path, double u_next) const {
    const Node& last = path.back();
    const double u = last.x[Crease::U1];
    Configuration pred = last.x;
    double dz = 0.0;
    if (path.size() >= 2) {
      const Node& prev = path[path.size() - 2];
      const double du = u - prev.x[Crease::U1];
      if (du != 0.0) {
        pred = extrapolate(prev.x, last.x, (u_next - u) / du);
        dz = angle_gap(last.x[Crease::Zeta], prev.x[Crease::Zeta]);
      }
    }
    pred[Crease::U1] = u_next;
    const double z_pred = pred[Crease::Zeta];
    const double w = std::min(1.0, std::max({3.0 * std::abs(dz), 3.0 * std::abs(u_next - u), 1e-6}));

    std::optional<Node> best;
    double best_d = 0.0;
    for (BranchPair b : all_branch_pairs()) {
      for (const LoopRoot& r : loop_roots_in_zeta(u_next, z_pred - w, z_pred + w, cs_, b, 24)) {
        auto cfg = try_assemble(u_next, wrap_angle(r.zeta), cs_, b, kClosureTol);
        if (!cfg) continue;
        const double d = config_distance(*cfg, pred);
        if (!best || d < best_d) {
          best = Node{*cfg, b};
          best_d = d;
        }
      }
    }
    if (!best) return std::nullopt;
    const double moved = config_distance(best->x, last.x);
    const double predicted_move = config_distance(pred, last.x);
    if (moved > 2.0 * step_) return std::nullopt;
    if (path.size() >= 2 && best_d > 0.5 * predicted_move + 1e-7) return std::nullopt;
    return best;
  }

 private:
  CaseSpec cs_;
  double step_;
};

// Closes a trace at a singular endpoint with the exact limiting state.
bool close_at(std::vector<Node>& path, double u_end) {
  const Configuration& last = path.back().x;
  Configuration s = snap_flat(last);
  for (std::size_t i = 0; i < kCreaseCount; ++i)
    if (s.angles[i] == kPi && last.angles[i] < 0.0) s.angles[i] = -kPi;
  s[Crease::U1] = u_end;
  if (config_distance(s, last) > kSnapRadius || max_closure(s) > kClosureTol) return false;
  path.push_back(Node{s, path.back().b});
  return true;
}

bool all_zero_zeta(const std::vector<Configuration>& xs, double tol) {
  return std::all_of(xs.begin(), xs.end(), [tol](const Configuration& c) { return std::abs(c[Crease::Zeta]) < tol; });
}

TraceCurve fold_line_trace(const FoldingMode& m, double step) {
  TraceCurve t;
  t.mode = m;
  t.nominal_step = step;
  const int n = static_cast<int>(std::ceil(kPi / step));
  for (int i = 0; i <= n; ++i) {
    const double a = m.direction * kPi * static_cast<double>(i) / n;
    Configuration c;
    c[Crease::Zeta] = a;
    c[Crease::Kappa1] = a;
    c[Crease::Kappa2] = a;
    t.samples.push_back(c);
  }
  t.reaches_origin = true;
  t.reaches_flat = true;
  return t;
}

}  // namespace

TraceCurve trace_mode(const FoldingMode& m, const TraceOptions& opts) {
  if (m.track == Track::FoldLine) return fold_line_trace(m, opts.step);
  if (!(opts.step > 0.0)) throw std::invalid_argument("trace_mode: step must be positive");
  const double lo = std::min(opts.u1_from, opts.u1_to), hi = std::max(opts.u1_from, opts.u1_to);
  if (lo < -kPi || hi > kPi || (lo < 0.0 && hi > 0.0) || lo == hi)
    throw std::invalid_argument("trace_mode: range must lie within [0, pi] or [-pi, 0]");

  TraceCurve t;
  t.mode = m;
  t.nominal_step = opts.step;

  // Seed away from singular ends, then march both ways.
  const double span = opts.u1_to - opts.u1_from;
  double seed_u = opts.u1_from + 0.5 * span;
  auto root = seed_root(m, seed_u);
  if (!root) {
    t.stop_reason = "no " + std::string(track_name(m.track)) + " point at the seed u1";
    return t;
  }
  auto seed_cfg = try_assemble(seed_u, root->zeta, m.case_spec, root->branches);
  if (!seed_cfg) {
    t.stop_reason = "seed configuration does not close";
    return t;
  }

  const Marcher marcher(m.case_spec, opts.step);
  const double side = opts.u1_from + opts.u1_to > 0.0 ? 1.0 : -1.0;
  auto leg = [&](double end, std::vector<Node>& path) {
    double aim = end;
    if (end == 0.0) aim = side * kOriginGap;
    if (std::abs(end) == kPi) aim = end - side * kSingularGap;
    std::string reason;
    const auto singular = is_singular_u1(end) ? std::optional<double>(end) : std::nullopt;
    const bool ok = marcher.run(path, aim, singular, opts.stops, opts.max_samples, reason);
    if (!is_singular_u1(end)) return reason;
    // Near a singular end, roots of different modes crowd together and the
    // windowed search can lose track; the limit state then closes the gap.
    const double gap = std::abs(path.back().x[Crease::U1] - end);
    if (!ok && gap > kCloseReach) return reason;
    if (!close_at(path, end)) return "limit state at u1 = " + std::to_string(end) + " is not valid";
    return std::string();
  };

  std::vector<Node> back{Node{*seed_cfg, root->branches}};
  std::vector<Node> fwd{Node{*seed_cfg, root->branches}};
  const std::string r1 = leg(opts.u1_from, back);
  const std::string r2 = leg(opts.u1_to, fwd);
  if (!r1.empty()) t.stop_reason = r1;
  if (!r2.empty()) t.stop_reason += (t.stop_reason.empty() ? "" : "; ") + r2;

  for (auto it = back.rbegin(); it != back.rend(); ++it) t.samples.push_back(it->x);
  for (std::size_t i = 1; i < fwd.size(); ++i) t.samples.push_back(fwd[i].x);

  t.reaches_origin = max_norm(t.samples.front()) == 0.0 || max_norm(t.samples.back()) == 0.0;
  t.reaches_flat = is_flat(t.samples.back(), 1e-12) && max_norm(t.samples.back()) > 0.0;
  return t;
}

TraceCurve full_trace(const FoldingMode& m, double step) {
  TraceOptions o;
  o.u1_from = 0.0;
  o.u1_to = m.direction * kPi;
  o.step = step;
  return trace_mode(m, o);
}

double hybrid_switch_zeta() {
  const CurveLaws laws = curve_laws(CaseSpec::parse("2"));
  const PartialFn gap = [&](double z) -> std::optional<double> { return laws.a_curve(z) - laws.b_curve(z); };
  auto z = brent_root(gap, 0.5, kPi - 1e-3);
  if (!z) throw std::runtime_error("hybrid_switch_zeta: no crossing of the A and B laws");
  return *z;
}

HybridTrace hybrid_iso_area_trace(double step) {
  const CaseSpec c2 = CaseSpec::parse("2");
  HybridTrace h;
  h.switch_zeta = hybrid_switch_zeta();
  h.switch_u1 = half_tan_unmap(kSqrt2 + 2.0, h.switch_zeta);

  TraceOptions a;
  a.u1_from = 0.0;
  a.u1_to = h.switch_u1;
  a.step = step;
  const TraceCurve ta = trace_mode(FoldingMode{c2, Track::A, 0, 1, Classification::NonDegenerate}, a);

  TraceOptions b = a;
  b.u1_from = h.switch_u1;
  b.u1_to = kPi;
  const TraceCurve tb = trace_mode(FoldingMode{c2, Track::B, 0, 1, Classification::DisconnectedFromOrigin}, b);

  h.curve.mode = FoldingMode{c2, Track::A, 0, 1, Classification::NonDegenerate};
  h.curve.nominal_step = step;
  h.curve.samples = ta.samples;
  h.switch_index = h.curve.samples.size() - 1;
  h.curve.samples.insert(h.curve.samples.end(), tb.samples.begin() + 1, tb.samples.end());
  h.curve.stop_reason = ta.stop_reason;
  if (!tb.stop_reason.empty()) h.curve.stop_reason += (h.curve.stop_reason.empty() ? "" : "; ") + tb.stop_reason;
  if (!ta.samples.empty() && !tb.samples.empty() && config_distance(ta.samples.back(), tb.samples.front()) > 1e-7)
    h.curve.stop_reason += (h.curve.stop_reason.empty() ? "" : "; ") + std::string("A and B segments do not meet");
  h.curve.reaches_origin = ta.reaches_origin;
  h.curve.reaches_flat = tb.reaches_flat;
  return h;
}

void append_flat_opening(TraceCurve& t, double step) {
  if (t.samples.empty()) return;
  const Configuration end = t.samples.back();
  const double u1 = end[Crease::U1];
  if (std::abs(u1) != kPi) return;
  const CaseSpec cs = t.mode.case_spec;
  const double z0 = end[Crease::Zeta];
  const double z_from = std::abs(z0) == kPi ? -std::copysign(kPi, u1) : z0;
  const int n = static_cast<int>(std::ceil(std::abs(z_from) / step));
  Configuration last = end;
  for (int i = 1; i <= n; ++i) {
    const double z = z_from * (1.0 - static_cast<double>(i) / n);
    std::optional<Configuration> best;
    for (BranchPair b : all_branch_pairs()) {
      auto cfg = try_assemble(u1, z, cs, b, kClosureTol);
      if (cfg && (!best || config_distance(*cfg, last) < config_distance(*best, last))) best = cfg;
    }
    if (!best || config_distance(*best, last) > 2.0 * step) {
      t.stop_reason = "flat opening stopped at zeta = " + std::to_string(z);
      return;
    }
    t.samples.push_back(*best);
    last = *best;
  }
  t.reaches_flat = is_flat(t.samples.back(), 1e-12);
}

OriginTest origin_connectivity(const FoldingMode& m) {
  OriginTest o;
  if (m.track == Track::FoldLine) {
    o.connected = true;
    return o;
  }
  TraceOptions opts;
  opts.u1_from = m.direction * 5e-5;
  opts.u1_to = m.direction * 0.5;
  opts.stops = {m.direction * 1e-4};
  const TraceCurve t = trace_mode(m, opts);
  for (const Configuration& c : t.samples) {
    if (c[Crease::U1] == m.direction * 1e-4) o.norm_coarse = max_norm(c);
    if (c[Crease::U1] == m.direction * 5e-5) o.norm_fine = max_norm(c);
  }
  if (!t.stop_reason.empty() || t.samples.empty()) {
    o.norm_coarse = o.norm_fine = o.extrapolated = kPi;
    return o;
  }
  o.extrapolated = 2.0 * o.norm_fine - o.norm_coarse;
  o.connected = std::abs(o.extrapolated) < 1e-6;
  return o;
}

std::vector<FoldingMode> enumerate_origin_modes() {
  std::vector<FoldingMode> modes;
  for (const CaseSpec& c : CaseSpec::all()) {
    for (Track track : {Track::A, Track::B, Track::C}) {
      const int variants = track == Track::C ? expected_c_count(c) : 1;
      for (int v = 0; v < variants; ++v) {
        FoldingMode m{c, track, v, 1, Classification::NonDegenerate};
        const OriginTest o = origin_connectivity(m);
        if (!o.connected) {
          m.classification = Classification::DisconnectedFromOrigin;
        } else {
          TraceOptions probe;
          probe.u1_from = 0.1;
          probe.u1_to = 1.0;
          probe.step = 0.05;
          const TraceCurve t = trace_mode(m, probe);
          m.classification = all_zero_zeta(t.samples, 1e-9) ? Classification::DegenerateZetaZero
                                                             : Classification::NonDegenerate;
        }
        modes.push_back(m);
      }
    }
  }
  modes.push_back(FoldingMode{CaseSpec{}, Track::FoldLine, 0, 1, Classification::FoldInHalf});
  return modes;
}

DofReport tangent_dof_report(const Configuration& c) {
  auto residual = [](const Configuration& x) {
    Eigen::Matrix<double, 12, 1> r;
    const Mat3 m[4] = {vertex_product(twist_v1(), x.v1_angles()), vertex_product(twist_v2(), x.v2_angles()),
                       vertex_product(twist_v3(), x.v3_state()), vertex_product(twist_v4(), x.v4_state())};
    for (int k = 0; k < 4; ++k) {
      const Vec3 a = axial_residual(m[k]);
      r(3 * k) = a.x;
      r(3 * k + 1) = a.y;
      r(3 * k + 2) = a.z;
    }
    return r;
  };
  const double h = 1e-6;
  Eigen::Matrix<double, 12, 13> jac;
  for (std::size_t j = 0; j < kCreaseCount; ++j) {
    Configuration p = c, q = c;
    p.angles[j] += h;
    q.angles[j] -= h;
    jac.col(static_cast<Eigen::Index>(j)) = (residual(p) - residual(q)) / (2.0 * h);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  DofReport rep;
  const double cut = 1e-7 * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    rep.singular_values.push_back(sv(i));
    if (sv(i) > cut) ++rank;
  }
  rep.kernel_dim = static_cast<int>(kCreaseCount) - rank;
  rep.singular = rep.kernel_dim > 1;
  return rep;
}

int tangent_dof(const Configuration& c) { return tangent_dof_report(c).kernel_dim; }

}  // namespace augtwist
