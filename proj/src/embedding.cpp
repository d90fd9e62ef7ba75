#include "augtwist/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "augtwist/angle.hpp"

namespace augtwist {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double ray_angle(Vec3 from, Vec3 to) {
  const double a = std::atan2(to.y - from.y, to.x - from.x);
  return a < 0.0 ? a + kTwoPi : a;
}

Vec3 centroid(const CreasePattern& p, int face) {
  Vec3 c;
  for (int id : p.faces[face]) c = c + p.vertices[id];
  return (1.0 / static_cast<double>(p.faces[face].size())) * c;
}

}  // namespace

CreasePattern build_pattern(double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("build_pattern: scale must be positive");
  // Laid out with the square as a diamond (ζ horizontal), where every
  // outer crease is axis-aligned, then moved into v3's frame.
  const double s = kSqrt2 / 2.0;
  const double L = s + 1.0;
  const std::vector<std::pair<double, double>> diamond = {
      {-s, 0}, {0, s}, {0, -s}, {s, 0},            // v3 v2 v1 v4
      {-s, L}, {-L, 0}, {0, L}, {L, s},            // ψ1 κ1 o2b o2a ends
      {s, -L}, {L, 0}, {0, -L}, {-L, -s},          // ψ2 κ2 o1b o1a ends
      {-L, L}, {L, L}, {L, -L}, {-L, -L}};         // outer corners

  CreasePattern p;
  const double c = std::cos(-kPi / 4.0), sn = std::sin(-kPi / 4.0);
  for (auto [x, y] : diamond) {
    const double dx = x + s, dy = y;
    p.vertices.push_back({scale * (c * dx - sn * dy), scale * (sn * dx + c * dy), 0.0});
  }
  p.v = {2, 1, 0, 3};
  p.faces = {{0, 3, 1},     {0, 2, 3},      {0, 1, 6, 4},    {1, 3, 9, 7},   {3, 2, 10, 8},
             {2, 0, 5, 11}, {0, 4, 12, 5},  {1, 7, 13, 6},   {3, 8, 14, 9},  {2, 11, 15, 10}};
  p.root_face = 0;
  p.creases = {{0, 2, Crease::U1},   {2, 3, Crease::U2},     {0, 1, Crease::Phi1}, {1, 3, Crease::Phi2},
               {0, 3, Crease::Zeta}, {0, 4, Crease::Psi1},   {0, 5, Crease::Kappa1}, {3, 8, Crease::Psi2},
               {3, 9, Crease::Kappa2}, {2, 11, Crease::O1a}, {2, 10, Crease::O1b}, {1, 7, Crease::O2a},
               {1, 6, Crease::O2b}};

  // Incident faces: the two faces having a and b as consecutive corners.
  for (auto& cr : p.creases) {
    const Vec3 a = p.vertices[cr.a], d = p.vertices[cr.b] - a;
    for (int f = 0; f < static_cast<int>(p.faces.size()); ++f) {
      const auto& poly = p.faces[f];
      const int n = static_cast<int>(poly.size());
      for (int i = 0; i < n; ++i) {
        const int x = poly[i], y = poly[(i + 1) % n];
        if ((x == cr.a && y == cr.b) || (x == cr.b && y == cr.a)) {
          const bool left = cross(d, centroid(p, f) - a).z > 0.0;
          cr.faces[left ? 0 : 1] = f;
        }
      }
    }
    if (cr.faces[0] < 0 || cr.faces[1] < 0) throw std::logic_error("build_pattern: crease without two faces");
  }

  p.parent_crease.assign(p.faces.size(), -1);
  std::vector<bool> seen(p.faces.size(), false);
  std::deque<int> queue{p.root_face};
  seen[p.root_face] = true;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    p.order.push_back(f);
    for (int k = 0; k < static_cast<int>(p.creases.size()); ++k) {
      const auto& cr = p.creases[k];
      for (int side = 0; side < 2; ++side) {
        const int g = cr.faces[side], other = cr.faces[1 - side];
        if (other == f && !seen[g]) {
          seen[g] = true;
          p.parent_crease[g] = k;
          queue.push_back(g);
        }
      }
    }
  }
  p.diameter = 2.0 * kSqrt2 * L * scale;
  return p;
}

std::vector<double> crease_rays(const CreasePattern& p, int vertex) {
  std::vector<double> rays;
  for (const auto& cr : p.creases) {
    if (cr.a == vertex) rays.push_back(ray_angle(p.vertices[cr.a], p.vertices[cr.b]));
    if (cr.b == vertex) rays.push_back(ray_angle(p.vertices[cr.b], p.vertices[cr.a]));
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

std::vector<double> sector_angles(const CreasePattern& p, int vertex) {
  const auto rays = crease_rays(p, vertex);
  std::vector<double> sectors;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const double next = i + 1 < rays.size() ? rays[i + 1] : rays[0] + kTwoPi;
    sectors.push_back(next - rays[i]);
  }
  return sectors;
}

int vertex_degree(const CreasePattern& p, int vertex) { return static_cast<int>(crease_rays(p, vertex).size()); }

FoldedState embed(const CreasePattern& p, const Configuration& c) {
  FoldedState s;
  s.face_transforms.assign(p.faces.size(), RigidTransform{});
  for (int f : p.order) {
    const int k = p.parent_crease[f];
    if (k < 0) continue;
    const auto& cr = p.creases[k];
    const bool left = cr.faces[0] == f;
    const int parent = cr.faces[left ? 1 : 0];
    const Vec3 a = p.vertices[cr.a];
    const double rho = left ? c[cr.key] : -c[cr.key];
    const Mat3 g = fold_about_planar_crease(ray_angle(a, p.vertices[cr.b]), rho);
    const RigidTransform& t = s.face_transforms[parent];
    // x ↦ t(g(x − a) + a)
    s.face_transforms[f] = RigidTransform{t.rotation * g, t.rotation * (a - g * a) + t.translation};
  }
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    std::vector<Vec3> corners;
    for (int id : p.faces[f]) corners.push_back(s.face_transforms[f].apply(p.vertices[id]));
    s.face_corners.push_back(std::move(corners));
  }
  for (const auto& cr : p.creases) {
    const auto& tl = s.face_transforms[cr.faces[0]];
    const auto& tr = s.face_transforms[cr.faces[1]];
    for (int id : {cr.a, cr.b})
      s.mismatch = std::max(s.mismatch, (tl.apply(p.vertices[id]) - tr.apply(p.vertices[id])).norm());
  }
  return s;
}

bool is_flat(const Configuration& c, double tol) {
  return std::all_of(c.angles.begin(), c.angles.end(), [tol](double a) {
    const double w = std::abs(wrap_angle(a));
    return std::min(w, kPi - w) <= tol;
  });
}

std::string obj_text(const FoldedState& s) {
  std::vector<Vec3> verts;
  std::vector<std::vector<int>> faces;
  for (const auto& corners : s.face_corners) {
    std::vector<int> ids;
    for (const Vec3& x : corners) {
      auto it = std::find_if(verts.begin(), verts.end(), [&](const Vec3& y) { return (x - y).norm() <= 1e-9; });
      if (it == verts.end()) {
        verts.push_back(x);
        ids.push_back(static_cast<int>(verts.size()));
      } else {
        ids.push_back(static_cast<int>(it - verts.begin()) + 1);
      }
    }
    faces.push_back(std::move(ids));
  }
  auto num = [](double x) {
    char buf[32];
    auto end = std::to_chars(buf, buf + sizeof buf, x + 0.0).ptr;  // + 0.0 turns −0 into 0
    return std::string(buf, end);
  };
  std::ostringstream out;
  for (const Vec3& x : verts) out << "v " << num(x.x) << ' ' << num(x.y) << ' ' << num(x.z) << '\n';
  for (std::size_t f = 0; f < faces.size(); ++f) {
    out << "o face" << f << "\nf";
    for (int id : faces[f]) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

void export_obj(const FoldedState& s, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << obj_text(s);
  if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace augtwist
