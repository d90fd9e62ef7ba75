#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "augtwist/configspace.hpp"
#include "augtwist/embedding.hpp"
#include "doctest.h"

using namespace augtwist;

namespace {

const CaseSpec kCase1 = CaseSpec::parse("1");
const CaseSpec kCase2 = CaseSpec::parse("2");

FoldingMode mode(const CaseSpec& c, Track t, int variant = 0) {
  return FoldingMode{c, t, variant, 1, Classification::NonDegenerate};
}

}  // namespace

TEST_SUITE("configspace") {

TEST_CASE("assemble at the unfolded state") {
  for (const auto& c : CaseSpec::all()) {
    const Configuration z = assemble(0, 0, c, {Branch::Plus, Branch::Plus});
    CHECK(max_norm(z) == 0.0);
  }
}

TEST_CASE("assemble at the case-1 A point") {
  const double za = -1.085462426991604;
  const Configuration c = assemble(1.6, za, kCase1, {Branch::Plus, Branch::Plus});
  CHECK(c[Crease::Zeta] == za);
  CHECK(c[Crease::U2] == doctest::Approx(0.80626445820333181).epsilon(1e-14));
  // Oracle: every angle of the A point.
  CHECK(c[Crease::Phi1] == doctest::Approx(0.80626445820333181).epsilon(1e-12));
  CHECK(c[Crease::Phi2] == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(c[Crease::Psi1] == doctest::Approx(0.51453757300839564).epsilon(1e-12));
  CHECK(c[Crease::Psi2] == doctest::Approx(0.51453757300839564).epsilon(1e-12));
  CHECK(c[Crease::Kappa1] == doctest::Approx(0.80626445820333181).epsilon(1e-12));
  CHECK(c[Crease::Kappa2] == doctest::Approx(0.80626445820333181).epsilon(1e-12));
  for (double r : closure_residuals(c)) CHECK(r < 1e-9);
  CHECK(mode_relation_error(c, kCase1) < 1e-12);
}

TEST_CASE("assemble at the case-1 C point") {
  const auto root = seed_root(mode(kCase1, Track::C), 1.6);
  REQUIRE(root.has_value());
  const Configuration c = assemble(1.6, root->zeta, kCase1, root->branches);
  CHECK(std::abs(c[Crease::Zeta]) < 1e-9);
  CHECK(max_closure(c) < 1e-9);
  CHECK(c[Crease::Phi1] == doctest::Approx(-0.80626445820333181).epsilon(1e-9));
  CHECK(c[Crease::Psi1] == doctest::Approx(1.6).epsilon(1e-9));
}

TEST_CASE("assemble rejects points off the loop") {
  CHECK_THROWS_AS(assemble(1.6, 0.3, kCase1, {Branch::Plus, Branch::Plus}), std::invalid_argument);
  CHECK_FALSE(try_assemble(1.6, 0.3, kCase1, {Branch::Minus, Branch::Plus}).has_value());
}

TEST_CASE("case-1 A trace") {
  const TraceCurve t = full_trace(mode(kCase1, Track::A));
  CHECK(t.stop_reason.empty());
  CHECK(t.reaches_origin);
  CHECK(t.reaches_flat);
  CHECK(is_flat(t.samples.back(), 1e-12));
  for (std::size_t i = 0; i < t.samples.size(); ++i) {
    const Configuration& c = t.samples[i];
    CHECK(max_closure(c) < 1e-9);
    CHECK(mode_relation_error(c, kCase1) < 1e-12);
    if (i) CHECK(config_distance(c, t.samples[i - 1]) < 5 * t.nominal_step);
    const double u1 = c[Crease::U1];
    if (std::abs(u1) < kPi) {
      CHECK(std::abs(angle_gap(c[Crease::Phi1], c[Crease::U2])) < 1e-8);
      CHECK(std::abs(angle_gap(c[Crease::Zeta], zeta_A_closed_form(u1, kCase1))) < 1e-8);
    }
    if (std::abs(u1) < 3.0) {
      CHECK(std::abs(std::tan(c[Crease::Zeta] / 2) - (kSqrt2 - 2) * std::tan(u1 / 2)) < 1e-8);
    }
  }
}

TEST_CASE("flat opening continues the case-1 A trace to zeta = 0") {
  TraceCurve t = full_trace(mode(kCase1, Track::A));
  CHECK(t.samples.back()[Crease::Zeta] == doctest::Approx(-kPi));
  const std::size_t n = t.samples.size();
  append_flat_opening(t);
  CHECK(t.samples.size() > n);
  const Configuration& end = t.samples.back();
  CHECK(end[Crease::Zeta] == 0.0);
  CHECK(is_flat(end, 1e-12));
  for (Crease k : {Crease::U1, Crease::U2, Crease::Phi1, Crease::Phi2}) CHECK(std::abs(end[k]) == kPi);
  for (std::size_t i = n - 1; i < t.samples.size(); ++i) {
    CHECK(max_closure(t.samples[i]) < 1e-9);
    if (i) CHECK(config_distance(t.samples[i], t.samples[i - 1]) < 5 * t.nominal_step);
  }
}

TEST_CASE("C traces stay on zeta = 0") {
  for (const auto& c : CaseSpec::all()) {
    for (int v = 0; v < expected_c_count(c); ++v) {
      const TraceCurve t = full_trace(mode(c, Track::C, v));
      CHECK(t.stop_reason.empty());
      // Within 0.05 of u1 = 0 or ±π the residual is degenerate in ζ and the
      // touching root is resolved only to about sqrt(eps).
      for (const auto& s : t.samples) {
        const double u1 = std::abs(s[Crease::U1]);
        const bool interior = u1 > 0.05 && u1 < kPi - 0.05;
        CHECK(std::abs(s[Crease::Zeta]) < (interior ? 1e-9 : 1e-7));
      }
    }
  }
}

TEST_CASE("B traces keep away from the origin") {
  for (const auto& c : CaseSpec::all()) {
    const TraceCurve t = full_trace(mode(c, Track::B));
    CHECK(t.stop_reason.empty());
    CHECK_FALSE(t.reaches_origin);
    double m = kPi;
    for (const auto& s : t.samples) m = std::min(m, max_norm(s));
    CHECK(m > 1e-3);
  }
}

TEST_CASE("trace ranges are validated") {
  TraceOptions o;
  o.u1_from = -0.5;
  o.u1_to = 0.5;
  CHECK_THROWS_AS(trace_mode(mode(kCase1, Track::A), o), std::invalid_argument);
  o.u1_from = 0.2;
  o.step = 0.0;
  CHECK_THROWS_AS(trace_mode(mode(kCase1, Track::A), o), std::invalid_argument);
}

TEST_CASE("partial trace hits requested stops") {
  TraceOptions o;
  o.u1_from = 0.3;
  o.u1_to = 1.2;
  o.stops = {0.5, 1.0};
  const TraceCurve t = trace_mode(mode(kCase2, Track::A), o);
  CHECK(t.stop_reason.empty());
  CHECK(t.samples.front()[Crease::U1] == 0.3);
  CHECK(t.samples.back()[Crease::U1] == 1.2);
  for (double s : o.stops)
    CHECK(std::any_of(t.samples.begin(), t.samples.end(), [&](const Configuration& c) { return c[Crease::U1] == s; }));
}

TEST_CASE("hybrid iso-area trace") {
  const HybridTrace h = hybrid_iso_area_trace();
  const auto& s = h.curve.samples;
  CHECK(h.curve.stop_reason.empty());
  CHECK(max_norm(s.front()) == 0.0);
  const CurveLaws laws = curve_laws(kCase2);
  const Configuration& sw = s[h.switch_index];
  CHECK(sw[Crease::U1] == doctest::Approx(h.switch_u1).epsilon(1e-12));
  CHECK(std::abs(angle_gap(sw[Crease::Phi1], laws.a_curve(sw[Crease::Zeta]))) < 1e-8);
  CHECK(std::abs(angle_gap(sw[Crease::Phi1], laws.b_curve(sw[Crease::Zeta]))) < 1e-8);
  const Configuration& end = s.back();
  CHECK(end[Crease::Zeta] == 0.0);
  CHECK(end[Crease::U2] == -kPi);
  for (Crease k : {Crease::U1, Crease::U2, Crease::Phi1, Crease::Phi2}) CHECK(std::abs(end[k]) == kPi);
  for (std::size_t i = 1; i < s.size(); ++i) {
    CHECK(max_closure(s[i]) < 1e-9);
    CHECK(config_distance(s[i], s[i - 1]) < 5 * h.curve.nominal_step);
  }
}

TEST_CASE("origin modes") {
  const auto modes = enumerate_origin_modes();
  int nondegenerate = 0, fold_lines = 0;
  for (const auto& m : modes) {
    switch (m.track) {
      case Track::A: CHECK(m.classification == Classification::NonDegenerate); break;
      case Track::B: CHECK(m.classification == Classification::DisconnectedFromOrigin); break;
      case Track::C: CHECK(m.classification == Classification::DegenerateZetaZero); break;
      case Track::FoldLine:
        CHECK(m.classification == Classification::FoldInHalf);
        ++fold_lines;
        break;
    }
    if (m.classification == Classification::NonDegenerate) ++nondegenerate;
  }
  CHECK(nondegenerate == 4);
  CHECK(fold_lines == 1);
  const auto again = enumerate_origin_modes();
  REQUIRE(again.size() == modes.size());
  for (std::size_t i = 0; i < modes.size(); ++i) CHECK(again[i].name() == modes[i].name());
}

TEST_CASE("origin connectivity extrapolates to zero for A") {
  const OriginTest a = origin_connectivity(mode(kCase1, Track::A));
  CHECK(a.connected);
  CHECK(a.norm_coarse == doctest::Approx(2 * a.norm_fine).epsilon(1e-3));
  CHECK_FALSE(origin_connectivity(mode(kCase1, Track::B)).connected);
}

TEST_CASE("tangent space dimension") {
  for (const auto& c : {kCase1, kCase2}) {
    const auto root = seed_root(mode(c, Track::A), 1.0);
    REQUIRE(root.has_value());
    CHECK(tangent_dof(assemble(1.0, root->zeta, c, root->branches)) == 1);
  }
  const DofReport o = tangent_dof_report(Configuration{});
  CHECK(o.singular);
  CHECK(o.kernel_dim > 1);
}

TEST_CASE("snap to flat") {
  Configuration c;
  c[Crease::U1] = 3.1415;
  c[Crease::Zeta] = -0.0001;
  const Configuration s = snap_flat(c);
  CHECK(s[Crease::U1] == kPi);
  CHECK(s[Crease::Zeta] == 0.0);
}

}  // TEST_SUITE
