#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>

#include "augtwist/configspace.hpp"
#include "augtwist/constants.hpp"
#include "augtwist/embedding.hpp"
#include "augtwist/trace_io.hpp"
#include "doctest.h"

using namespace augtwist;

namespace {

const CaseSpec kCase1 = CaseSpec::parse("1");

Configuration case1_a(double u1) {
  const auto root = seed_root(FoldingMode{kCase1, Track::A, 0, 1, Classification::NonDegenerate}, u1);
  REQUIRE(root.has_value());
  return assemble(u1, root->zeta, kCase1, root->branches);
}

std::vector<double> sorted_degrees(std::vector<double> v) {
  for (double& x : v) x = x * 180.0 / kPi;
  std::sort(v.begin(), v.end());
  return v;
}

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_SUITE("embedding") {

TEST_CASE("pattern combinatorics") {
  const CreasePattern p = build_pattern();
  CHECK(p.creases.size() == 13);
  CHECK(p.faces.size() == 10);
  std::vector<int> degrees;
  for (int v : p.v) degrees.push_back(vertex_degree(p, v));
  CHECK(degrees == std::vector<int>{4, 4, 5, 5});
  CHECK_THROWS_AS(build_pattern(0.0), std::invalid_argument);
}

TEST_CASE("sector angles") {
  const CreasePattern p = build_pattern();
  for (int v : {p.v[0], p.v[1]}) {
    const auto s = sorted_degrees(sector_angles(p, v));
    REQUIRE(s.size() == 4);
    CHECK(s[0] == doctest::Approx(45));
    CHECK(s[1] == doctest::Approx(90));
    CHECK(s[2] == doctest::Approx(90));
    CHECK(s[3] == doctest::Approx(135));
  }
  // v3 in cyclic order from the φ1 ray: 45, 90, 135, 45, 45.
  const auto rays = crease_rays(p, p.v[2]);
  const auto expected = twist_v3().rays();
  REQUIRE(rays.size() == 5);
  for (double r : expected) {
    CHECK(std::any_of(rays.begin(), rays.end(), [&](double x) { return std::abs(angle_gap(x, r)) < 1e-12; }));
  }
  const auto s = sector_angles(p, p.v[2]);
  const std::vector<double> want{45, 90, 135, 45, 45};
  for (std::size_t i = 0; i < 5; ++i) CHECK(s[i] * 180 / kPi == doctest::Approx(want[i]));
}

TEST_CASE("embedding the unfolded state") {
  const CreasePattern p = build_pattern();
  const FoldedState s = embed(p, Configuration{});
  for (const auto& t : s.face_transforms) {
    CHECK(t.rotation == Mat3::identity());
    CHECK(t.translation.norm() == 0.0);
  }
  CHECK(s.mismatch == 0.0);
  std::istringstream obj(obj_text(s));
  std::string line;
  int vertices = 0, objects = 0;
  while (std::getline(obj, line)) {
    if (line.rfind("v ", 0) == 0) {
      ++vertices;
      CHECK(line.substr(line.rfind(' ') + 1) == "0");
    }
    if (line.rfind("o ", 0) == 0) ++objects;
  }
  CHECK(vertices == 16);
  CHECK(objects == 10);
}

TEST_CASE("embedding a valid and an invalid state") {
  const CreasePattern p = build_pattern();
  Configuration c = case1_a(1.6);
  CHECK(embed(p, c).mismatch < 1e-8 * p.diameter);
  c[Crease::Phi1] += 0.05;
  CHECK(embed(p, c).mismatch > 1e-4);
}

TEST_CASE("faces stay rigid") {
  const CreasePattern p = build_pattern(2.5);
  const FoldedState s = embed(p, case1_a(2.2));
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& ids = p.faces[f];
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        const double d0 = (p.vertices[ids[j]] - p.vertices[ids[i]]).norm();
        const double d1 = (s.face_corners[f][j] - s.face_corners[f][i]).norm();
        CHECK(std::abs(d1 - d0) <= 1e-10 * d0);
      }
    }
    CHECK(orthogonality_error(s.face_transforms[f].rotation) < 1e-12);
    CHECK(s.face_transforms[f].rotation.determinant() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("flatness") {
  CHECK(is_flat(Configuration{}, 1e-6));
  CHECK_FALSE(is_flat(case1_a(1.0), 1e-6));
  TraceCurve t = full_trace(FoldingMode{kCase1, Track::A, 0, 1, Classification::NonDegenerate});
  append_flat_opening(t);
  const Configuration& end = t.samples.back();
  CHECK(is_flat(end, 1e-6));
  CHECK(end[Crease::Zeta] == 0.0);
  for (Crease k : {Crease::U1, Crease::U2, Crease::Phi1, Crease::Phi2}) CHECK(std::abs(end[k]) == kPi);
}

TEST_CASE("OBJ export reports the path on failure") {
  const FoldedState s = embed(build_pattern(), Configuration{});
  const std::string bad = "/nonexistent-dir/x.obj";
  try {
    export_obj(s, bad);
    FAIL("no exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(bad) != std::string::npos);
  }
  const std::string ok = temp_path("augtwist_planar.obj");
  export_obj(s, ok);
  CHECK(std::filesystem::file_size(ok) == obj_text(s).size());
  std::remove(ok.c_str());
}

TEST_CASE("trace CSV") {
  TraceOptions o;
  o.u1_from = 0.2;
  o.u1_to = 0.8;
  const TraceCurve t = trace_mode(FoldingMode{kCase1, Track::A, 0, 1, Classification::NonDegenerate}, o);
  const std::string csv = trace_csv(t);
  CHECK(csv.rfind("u1,u2,phi1,phi2,psi1,psi2,zeta,kappa1,kappa2,o1a,o1b,o2a,o2b\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(t.samples.size()) + 1);
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-kPi) == "-3.141592653589793");
}

TEST_CASE("trace JSON round trip is exact") {
  TraceCurve t = full_trace(FoldingMode{CaseSpec::parse("3b"), Track::C, 1, 1, Classification::DegenerateZetaZero});
  const TraceCurve back = parse_trace_json(trace_json(t));
  CHECK(back.samples == t.samples);
  CHECK(back.mode.name() == t.mode.name());
  CHECK(back.mode.classification == t.mode.classification);
  CHECK(back.reaches_origin == t.reaches_origin);
  CHECK(back.reaches_flat == t.reaches_flat);
  CHECK(back.nominal_step == t.nominal_step);

  const std::string path = temp_path("augtwist_trace.json");
  export_trace(t, path, TraceFormat::Json);
  CHECK(import_trace_json(path).samples == t.samples);
  std::remove(path.c_str());
  CHECK_THROWS_AS(import_trace_json("/nonexistent-dir/t.json"), std::runtime_error);
  CHECK_THROWS_AS(parse_trace_format("xml"), std::invalid_argument);
}

}  // TEST_SUITE
