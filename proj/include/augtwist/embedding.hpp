#pragma once

#include <array>
#include <string>
#include <vector>

#include "augtwist/configuration.hpp"
#include "augtwist/rotation3d.hpp"

namespace augtwist {

struct PatternCrease {
  int a = 0;  ///< vertex ids; the crease is directed a → b
  int b = 0;
  Crease key = Crease::U1;
  std::array<int, 2> faces{-1, -1};  ///< left and right of a → b
};

/// The augmented square twist laid out in the frame of v3: v3 at the
/// origin, φ1 along +x to v2, u1 along −y to v1. Central square of side
/// `scale`; corner faces are squares of the same side.
struct CreasePattern {
  std::vector<Vec3> vertices;           ///< z = 0
  std::vector<std::vector<int>> faces;  ///< counter-clockwise corner ids
  std::vector<PatternCrease> creases;
  std::array<int, 4> v{};               ///< ids of v1, v2, v3, v4
  int root_face = 0;                    ///< between ζ and φ1 at v3
  std::vector<int> parent_crease;       ///< face tree: crease to parent, −1 at the root
  std::vector<int> order;               ///< faces in tree order
  double diameter = 0.0;
};

CreasePattern build_pattern(double scale = 1.0);

/// Planar angles of the crease rays at a vertex, ascending in [0, 2π).
std::vector<double> crease_rays(const CreasePattern& p, int vertex);
/// Sectors between consecutive rays, starting from the smallest ray angle.
std::vector<double> sector_angles(const CreasePattern& p, int vertex);
int vertex_degree(const CreasePattern& p, int vertex);

struct RigidTransform {
  Mat3 rotation = Mat3::identity();
  Vec3 translation;

  Vec3 apply(Vec3 x) const { return rotation * x + translation; }
};

struct FoldedState {
  std::vector<RigidTransform> face_transforms;
  std::vector<std::vector<Vec3>> face_corners;
  double mismatch = 0.0;  ///< worst disagreement of two faces on a shared crease endpoint
};

/// Places every face by composing crease rotations down the face tree.
/// Creases off the tree are not used; their mismatch measures closure.
FoldedState embed(const CreasePattern& p, const Configuration& c);

/// Every angle within tol of 0 or ±π.
bool is_flat(const Configuration& c, double tol);

/// Wavefront OBJ text: one object per face, shared corners merged within
/// 1e−9, faces in the pattern's counter-clockwise order.
std::string obj_text(const FoldedState& s);

/// Writes obj_text to path. Throws std::runtime_error naming the path.
void export_obj(const FoldedState& s, const std::string& path);

}  // namespace augtwist
