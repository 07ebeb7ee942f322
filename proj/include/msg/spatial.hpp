#ifndef MSG_SPATIAL_HPP
#define MSG_SPATIAL_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "msg/graphs.hpp"
#include "msg/quatalg.hpp"

namespace msg {

// Point on the unit 3-sphere: the exact quaternion and its cached double
// embedding.  Everything geometric stays exact; the doubles exist only for
// the projection stage.
struct S3Point {
  Quaternion q;
  std::array<double, 4> f{};  // (w, x, y, z)
};

// Throws DomainError unless |q| = 1 exactly.
S3Point make_s3_point(const Quaternion& q);

// Exact orbit of the seed under the pair action q -> a*q*b^-1, deduplicated
// by exact equality and sorted lexicographically.
std::vector<S3Point> orbit_points(std::span<const QuatPair> pairs,
                                  const S3Point& seed);

// Connects every pair of points at the minimum nonzero chordal distance,
// decided in exact arithmetic.  Throws DegeneratePointSet when fewer than
// two distinct points exist.
Multigraph nn_skeleton(std::span<const S3Point> points);

// Stereographic projection with the pole rotated to (1,0,0,0): p maps under
// r = pole^-1 * p to (w,x,y,z) -> (x,y,z)/(1-w).  Only exact equality with
// the pole throws PoleHit; everything else, however close, projects.
std::array<double, 3> stereographic(const S3Point& p, const S3Point& pole);

// Fixed generic pole (1,2,4,10)/11: rational, exactly unit, and on no edge
// arc of the built-in models.
S3Point default_pole();

struct Scene {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::vector<std::array<double, 3>>> polylines;
  std::string source;
  std::array<double, 4> pole{};
};

// Samples every edge along its minor great-circle arc and projects it.
// Antipodal endpoints take the first of {1, i, j, k} with a nonzero
// component orthogonal to the edge as waypoint.  samples_per_edge counts
// the points of one polyline, endpoints included (minimum 8).  Throws
// PoleOnGraph when a vertex equals the pole exactly or a sampled point
// comes within 1e-12 of it, DomainError for loop edges.
Scene export_scene(const Multigraph& graph, std::span<const S3Point> embedding,
                   const S3Point& pole, int samples_per_edge = 32,
                   const std::string& source = "");

// {"vertices": [[x,y,z], ...], "polylines": [[[x,y,z], ...], ...],
//  "meta": {"source": ..., "pole": [w,x,y,z]}}
std::string scene_json(const Scene& s);

// Wavefront-style text: one "v x y z" record per sample in polyline order,
// then one "l i j k ..." record per polyline (1-based indices).
std::string scene_obj(const Scene& s);

// Exact vertex sets of the built-in models: tesseract, simplex4, cube,
// dodecahedron, 600cell.  Throws DomainError for anything else.
std::vector<S3Point> model_points(const std::string& name);

}  // namespace msg

#endif
