// Acceptance criteria 1 to 10. One line per criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "augtwist/configspace.hpp"
#include "augtwist/embedding.hpp"
#include "augtwist/loopsolver.hpp"

using namespace augtwist;

namespace {

constexpr double kEq2Tol = 1e-12;
constexpr double kCutIdentityTol = 1e-10;
constexpr double kTanLawTol = 1e-8;
constexpr double kZetaCTol = 1e-9;
constexpr double kClosureTol = 1e-9;
constexpr double kBDistance = 0.5;
constexpr double kFlatTol = 1e-6;
constexpr double kSwitchTol = 1e-8;
constexpr double kMismatchRel = 1e-8;
constexpr int kU1Samples = 50;
constexpr int kRandomPairs = 1000;
constexpr int kDofProbes = 20;

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::printf("criterion %2d %s  %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

std::string sci(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2e", x);
  return b;
}

std::vector<double> u1_samples() {
  std::vector<double> u;
  for (int k = 0; k < kU1Samples; ++k) u.push_back(-kPi + (k + 0.5) * 2 * kPi / kU1Samples);
  return u;
}

const IntersectionPoint* point(const IntersectionReport& r, PointLabel l) {
  for (const auto& p : r.points)
    if (p.label == l) return &p;
  return nullptr;
}

struct Traces {
  std::vector<TraceCurve> nondegenerate;  // full traces, case-1 A continued to ζ = 0
  std::vector<TraceCurve> all;            // every enumerated mode
  HybridTrace hybrid;
};

void criterion1(const std::vector<FoldingMode>& modes) {
  const auto n = std::count_if(modes.begin(), modes.end(),
                               [](const FoldingMode& m) { return m.classification == Classification::NonDegenerate; });
  report(1, n == 4, "mode count: " + std::to_string(n) + " NonDegenerate modes through the origin (need exactly 4)");
}

void criterion2() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  double cos_err = 0, cut_err = 0;
  int feasible = 0, bad_infeasible = 0;
  for (int i = 0; i < kRandomPairs; ++i) {
    const double u = ang(rng), z = ang(rng);
    const double rhs = 0.5 * (1 - std::cos(z) + std::cos(u) * (1 + std::cos(z)) - std::sqrt(2.0) * std::sin(u) * std::sin(z));
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      const auto s = solve_forward(u, z, b);
      if (!s) {
        if (std::abs(rhs) <= 1 + 1e-9) ++bad_infeasible;
        continue;
      }
      ++feasible;
      cos_err = std::max(cos_err, std::abs(std::cos(s->psi) - rhs));
      cut_err = std::max(cut_err, (cut_image_cw(u, z) - cut_image_ccw(s->ccw_side, s->psi)).norm());
    }
  }
  report(2, cos_err < kEq2Tol && cut_err < kCutIdentityTol && bad_infeasible == 0,
         "psi cosine law max err " + sci(cos_err) + " (tol " + sci(kEq2Tol) + "), cut identity max residual " +
             sci(cut_err) + " (tol " + sci(kCutIdentityTol) + "), " + std::to_string(feasible / 2) + "/" +
             std::to_string(kRandomPairs) + " feasible, " + std::to_string(bad_infeasible) + " wrongly infeasible");
}

void criterion3() {
  double worst1 = 0, worst2 = 0;
  int missing = 0;
  for (double u1 : u1_samples()) {
    for (auto [name, k, worst] : {std::tuple{"1", std::sqrt(2.0) - 2, &worst1}, std::tuple{"2", std::sqrt(2.0) + 2, &worst2}}) {
      const auto* a = point(find_intersections(u1, CaseSpec::parse(name)), PointLabel::A);
      if (!a) {
        ++missing;
        continue;
      }
      *worst = std::max(*worst, std::abs(std::tan(a->root.zeta / 2) - k * std::tan(u1 / 2)));
    }
  }
  report(3, missing == 0 && worst1 < kTanLawTol && worst2 < kTanLawTol,
         "A tangent law over " + std::to_string(kU1Samples) + " u1: case 1 (sqrt2-2) max err " + sci(worst1) +
             ", case 2 (sqrt2+2) max err " + sci(worst2) + " (tol " + sci(kTanLawTol) + ")");
}

void criterion4() {
  double zeta = 0, closure = 0;
  int missing = 0, points = 0;
  for (const auto& c : CaseSpec::all()) {
    for (double u1 : u1_samples()) {
      const IntersectionReport r = find_intersections(u1, c);
      if (r.count(PointLabel::C) != expected_c_count(c)) ++missing;
      for (const auto& p : r.points) {
        if (p.label != PointLabel::C) continue;
        ++points;
        zeta = std::max(zeta, std::abs(p.root.zeta));
        const auto cfg = try_assemble(u1, p.root.zeta, c, p.root.branches, 1.0);
        if (!cfg) {
          ++missing;
          continue;
        }
        closure = std::max(closure, max_closure(*cfg));
        zeta = std::max(zeta, std::abs((*cfg)[Crease::Zeta]));
      }
    }
  }
  report(4, missing == 0 && zeta < kZetaCTol && closure < kClosureTol,
         std::to_string(points) + " C points over 4 cases: max |zeta| " + sci(zeta) + " (tol " + sci(kZetaCTol) +
             "), max closure " + sci(closure) + " (tol " + sci(kClosureTol) + ")");
}

void criterion5(const Traces& t) {
  double least = kPi;
  bool complete = true;
  for (const auto& c : t.all) {
    if (c.mode.track != Track::B) continue;
    complete &= c.stop_reason.empty();
    for (const auto& s : c.samples) least = std::min(least, max_norm(s));
  }
  report(5, complete && least > kBDistance,
         "B traces: min max-norm distance to origin " + std::to_string(least) + " rad (need > " + std::to_string(kBDistance) + ")");
}

void criterion6() {
  const IntersectionReport r1 = find_intersections(1.6, CaseSpec::parse("1"));
  const IntersectionReport r2 = find_intersections(0.4, CaseSpec::parse("2"));
  auto three = [](const IntersectionReport& r) {
    return r.points.size() == 3 && r.anomalies.empty() && r.count(PointLabel::A) == 1 && r.count(PointLabel::B) == 1 &&
           r.count(PointLabel::C) == 1;
  };
  report(6, three(r1) && three(r2),
         "labelled points: case 1 at u1=1.6 -> " + std::to_string(r1.points.size()) + " (+" +
             std::to_string(r1.anomalies.size()) + " anomalies), case 2 at u1=0.4 -> " +
             std::to_string(r2.points.size()) + " (+" + std::to_string(r2.anomalies.size()) + " anomalies)");
}

void criterion7(const Traces& t) {
  int probes = 0, ones = 0;
  for (const auto& c : t.nondegenerate) {
    std::vector<const Configuration*> inner;
    for (const auto& s : c.samples)
      if (std::abs(s[Crease::U1]) > 0.05 && std::abs(s[Crease::U1]) < kPi - 0.05) inner.push_back(&s);
    const int per = kDofProbes / static_cast<int>(t.nondegenerate.size());
    for (int k = 1; k <= per && !inner.empty(); ++k) {
      ++probes;
      if (tangent_dof(*inner[k * inner.size() / (per + 1)]) == 1) ++ones;
    }
  }
  const DofReport origin = tangent_dof_report(Configuration{});
  report(7, probes == kDofProbes && ones == probes && origin.singular,
         "tangent dof = 1 at " + std::to_string(ones) + "/" + std::to_string(probes) +
             " generic points; origin kernel dim " + std::to_string(origin.kernel_dim) +
             (origin.singular ? " (singular)" : " (not flagged)"));
}

void criterion8(const Traces& t) {
  bool ok = t.nondegenerate.size() == 4;
  std::string detail;
  for (const auto& c : t.nondegenerate) {
    const Configuration& end = c.samples.back();
    bool flat = c.stop_reason.empty() && is_flat(end, kFlatTol);
    if (c.mode.case_spec == CaseSpec::parse("1")) flat &= std::abs(end[Crease::Zeta]) <= kFlatTol;
    ok &= flat;
    detail += c.mode.name() + " zeta_end=" + std::to_string(end[Crease::Zeta]) + (flat ? "" : " NOT FLAT") + "; ";
  }
  const Configuration& h = t.hybrid.curve.samples.back();
  const bool hybrid_ok = is_flat(h, kFlatTol) && std::abs(h[Crease::Zeta]) <= kFlatTol;
  ok &= hybrid_ok;
  detail += "hybrid zeta_end=" + std::to_string(h[Crease::Zeta]);
  report(8, ok, "flat ends (tol " + sci(kFlatTol) + "): " + detail);
}

void criterion9(const Traces& t) {
  const auto& s = t.hybrid.curve.samples;
  const CurveLaws laws = curve_laws(CaseSpec::parse("2"));
  const Configuration& sw = s[t.hybrid.switch_index];
  const double ea = std::abs(angle_gap(sw[Crease::Phi1], laws.a_curve(sw[Crease::Zeta])));
  const double eb = std::abs(angle_gap(sw[Crease::Phi1], laws.b_curve(sw[Crease::Zeta])));
  const Configuration& end = s.back();
  bool square_flat = true;
  for (Crease k : {Crease::U1, Crease::U2, Crease::Phi1, Crease::Phi2}) square_flat &= std::abs(std::abs(end[k]) - kPi) <= kFlatTol;
  const bool ok = t.hybrid.curve.stop_reason.empty() && max_norm(s.front()) == 0.0 && ea < kSwitchTol &&
                  eb < kSwitchTol && std::abs(end[Crease::Zeta]) <= kFlatTol && square_flat &&
                  std::abs(end[Crease::U2] + kPi) <= kFlatTol;
  report(9, ok, "hybrid: starts at origin, switch at u1=" + std::to_string(t.hybrid.switch_u1) + " zeta=" +
                    std::to_string(sw[Crease::Zeta]) + " off A law " + sci(ea) + ", off B law " + sci(eb) +
                    ", ends at (zeta, u2) = (" + std::to_string(end[Crease::Zeta]) + ", " +
                    std::to_string(end[Crease::U2]) + ")");
}

void criterion10(const Traces& t) {
  const CreasePattern p = build_pattern();
  double worst = 0;
  std::size_t samples = 0;
  auto scan = [&](const TraceCurve& c) {
    for (const auto& s : c.samples) {
      worst = std::max(worst, embed(p, s).mismatch);
      ++samples;
    }
  };
  for (const auto& c : t.all) scan(c);
  for (const auto& c : t.nondegenerate) scan(c);
  scan(t.hybrid.curve);
  report(10, worst < kMismatchRel * p.diameter,
         "embedding mismatch over " + std::to_string(samples) + " trace samples: max " + sci(worst) + " (tol " +
             sci(kMismatchRel * p.diameter) + ")");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto modes = enumerate_origin_modes();
  Traces t;
  for (const auto& m : modes) {
    t.all.push_back(full_trace(m));
    if (m.classification != Classification::NonDegenerate) continue;
    TraceCurve c = t.all.back();
    if (m.case_spec == CaseSpec::parse("1")) append_flat_opening(c);
    t.nondegenerate.push_back(std::move(c));
  }
  t.hybrid = hybrid_iso_area_trace();

  criterion1(modes);
  criterion2();
  criterion3();
  criterion4();
  criterion5(t);
  criterion6();
  criterion7(t);
  criterion8(t);
  criterion9(t);
  criterion10(t);

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 10 criteria failed (%.1f s)\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
