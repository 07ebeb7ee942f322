#include "msg/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "msg/errors.hpp"

namespace msg {

namespace {

using Vec4 = std::array<double, 4>;

double dot4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Vec4 qmul(const Vec4& p, const Vec4& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Vec4 normalized(Vec4 v) {
  double n = std::sqrt(dot4(v, v));
  for (double& c : v) c /= n;
  return v;
}

// First of the axes {1, i, j, k} with a substantial component orthogonal to
// u, orthogonalized and normalized; resolves which half great circle an
// antipodal edge takes.
Vec4 waypoint(const Vec4& u) {
  for (int axis = 0; axis < 4; ++axis) {
    Vec4 w{};
    w[axis] = 1.0;
    double c = dot4(w, u);
    for (int i = 0; i < 4; ++i) w[i] -= c * u[i];
    if (dot4(w, w) > 0.25) return normalized(w);
  }
  throw DomainError("no waypoint axis found");  // unreachable for unit u
}

FieldElem chord2(const S3Point& p, const S3Point& q) {
  return (p.q + (-q.q)).norm();
}

bool field_less(const FieldElem& x, const FieldElem& y) {
  return (x - y).sign() < 0;
}

FieldElem half() { return FieldElem(Fraction(1, 2)); }

std::vector<S3Point> tesseract_points() {
  std::vector<S3Point> out;
  for (int mask = 0; mask < 16; ++mask) {
    Quaternion q;
    FieldElem* comp[4] = {&q.w, &q.x, &q.y, &q.z};
    for (int i = 0; i < 4; ++i)
      *comp[i] = (mask >> i) & 1 ? -half() : half();
    out.push_back(make_s3_point(q));
  }
  return out;
}

std::vector<S3Point> simplex4_points() {
  std::vector<S3Point> out;
  out.push_back(make_s3_point(Quaternion::one()));
  FieldElem w(Fraction(-1, 4));
  FieldElem s(Fraction(0), Fraction(0), Fraction(1, 4));  // sqrt5/4
  static const int signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (const auto& sg : signs) {
    Quaternion q{w, sg[0] > 0 ? s : -s, sg[1] > 0 ? s : -s, sg[2] > 0 ? s : -s};
    out.push_back(make_s3_point(q));
  }
  return out;
}

std::vector<S3Point> cube_points() {
  std::vector<S3Point> out;
  for (int mask = 0; mask < 8; ++mask) {
    Quaternion q;
    q.w = half();
    FieldElem* comp[3] = {&q.x, &q.y, &q.z};
    for (int i = 0; i < 3; ++i)
      *comp[i] = (mask >> i) & 1 ? -half() : half();
    out.push_back(make_s3_point(q));
  }
  return out;
}

std::vector<S3Point> dodecahedron_points() {
  std::vector<S3Point> out;
  for (const S3Point& p : cube_points()) out.push_back(p);
  // Cyclic permutations of (0, 1/phi, phi)/2 with independent signs.
  FieldElem hp(Fraction(1, 4), Fraction(0), Fraction(1, 4));    // phi/2
  FieldElem hq(Fraction(-1, 4), Fraction(0), Fraction(1, 4));   // 1/(2 phi)
  for (int rot = 0; rot < 3; ++rot)
    for (int s1 = -1; s1 <= 1; s1 += 2)
      for (int s2 = -1; s2 <= 1; s2 += 2) {
        FieldElem coords[3];
        coords[rot % 3] = FieldElem(Fraction(0));
        coords[(rot + 1) % 3] = s1 > 0 ? hq : -hq;
        coords[(rot + 2) % 3] = s2 > 0 ? hp : -hp;
        out.push_back(
            make_s3_point({half(), coords[0], coords[1], coords[2]}));
      }
  return out;
}

std::array<double, 3> project_sample(const Vec4& s, const Vec4& pole_conj) {
  Vec4 r = qmul(pole_conj, s);
  double d = 1.0 - r[0];
  return {r[1] / d, r[2] / d, r[3] / d};
}

}  // namespace

S3Point make_s3_point(const Quaternion& q) {
  if (!q.is_unit()) throw DomainError("point is not on the unit sphere");
  return {q, {q.w.to_double(), q.x.to_double(), q.y.to_double(),
              q.z.to_double()}};
}

std::vector<S3Point> orbit_points(std::span<const QuatPair> pairs,
                                  const S3Point& seed) {
  std::set<Quaternion> seen{seed.q};
  std::vector<Quaternion> frontier{seed.q};
  while (!frontier.empty()) {
    std::vector<Quaternion> next;
    for (const Quaternion& q : frontier)
      for (const QuatPair& p : pairs) {
        Quaternion r = act(p, q);
        if (seen.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  std::vector<S3Point> out;
  out.reserve(seen.size());
  for (const Quaternion& q : seen) out.push_back(make_s3_point(q));
  return out;
}

Multigraph nn_skeleton(std::span<const S3Point> points) {
  size_t n = points.size();
  std::optional<FieldElem> min2;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      FieldElem d = chord2(points[i], points[j]);
      if (d.is_zero()) continue;
      if (!min2 || field_less(d, *min2)) min2 = d;
    }
  if (!min2) throw DegeneratePointSet("fewer than two distinct points");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (chord2(points[i], points[j]) == *min2)
        edges.push_back({(int)i, (int)j});
  return Multigraph((int)n, std::move(edges));
}

std::array<double, 3> stereographic(const S3Point& p, const S3Point& pole) {
  if (p.q == pole.q) throw PoleHit("point equals the projection pole");
  Quaternion r = pole.q.conj() * p.q;
  double d = 1.0 - r.w.to_double();
  return {r.x.to_double() / d, r.y.to_double() / d, r.z.to_double() / d};
}

S3Point default_pole() {
  return make_s3_point({FieldElem(Fraction(1, 11)), FieldElem(Fraction(2, 11)),
                        FieldElem(Fraction(4, 11)),
                        FieldElem(Fraction(10, 11))});
}

Scene export_scene(const Multigraph& graph, std::span<const S3Point> embedding,
                   const S3Point& pole, int samples_per_edge,
                   const std::string& source) {
  if (samples_per_edge < 8)
    throw DomainError("need at least 8 samples per edge");
  if ((size_t)graph.n_vertices() != embedding.size())
    throw DomainError("embedding size differs from the vertex count");

  for (const S3Point& p : embedding)
    if (p.q == pole.q) throw PoleOnGraph("a vertex sits on the pole");

  Scene scene;
  scene.source = source;
  scene.pole = pole.f;
  for (const S3Point& p : embedding)
    scene.vertices.push_back(stereographic(p, pole));

  Vec4 pole_conj{pole.f[0], -pole.f[1], -pole.f[2], -pole.f[3]};
  for (const auto& [ia, ib] : graph.edges()) {
    if (ia == ib) throw DomainError("loop edges have no geodesic arc");
    const S3Point& pa = embedding[ia];
    const S3Point& pb = embedding[ib];
    const Vec4& u = pa.f;
    const Vec4& v = pb.f;

    std::vector<Vec4> samples(samples_per_edge);
    if (pb.q == -pa.q) {
      Vec4 w = waypoint(u);  // half great circle u -> w -> -u
      for (int k = 0; k < samples_per_edge; ++k) {
        double t = M_PI * k / (samples_per_edge - 1);
        Vec4 s;
        for (int i = 0; i < 4; ++i)
          s[i] = std::cos(t) * u[i] + std::sin(t) * w[i];
        samples[k] = normalized(s);
      }
    } else {
      double c = std::clamp(dot4(u, v), -1.0, 1.0);
      double theta = std::acos(c);
      for (int k = 0; k < samples_per_edge; ++k) {
        double t = (double)k / (samples_per_edge - 1);
        Vec4 s;
        if (theta < 1e-12) {
          s = u;
        } else {
          double wa = std::sin((1.0 - t) * theta) / std::sin(theta);
          double wb = std::sin(t * theta) / std::sin(theta);
          for (int i = 0; i < 4; ++i) s[i] = wa * u[i] + wb * v[i];
        }
        samples[k] = normalized(s);
      }
    }

    std::vector<std::array<double, 3>> line;
    line.reserve(samples.size());
    for (const Vec4& s : samples) {
      if (dot4(s, pole.f) > 1.0 - 1e-12)
        throw PoleOnGraph("an edge arc passes through the pole");
      line.push_back(project_sample(s, pole_conj));
    }
    scene.polylines.push_back(std::move(line));
  }
  return scene;
}

std::string scene_json(const Scene& s) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : s.vertices) j["vertices"].push_back({v[0], v[1], v[2]});
  j["polylines"] = nlohmann::ordered_json::array();
  for (const auto& line : s.polylines) {
    nlohmann::ordered_json jl = nlohmann::ordered_json::array();
    for (const auto& p : line) jl.push_back({p[0], p[1], p[2]});
    j["polylines"].push_back(std::move(jl));
  }
  j["meta"] = {{"source", s.source},
               {"pole", {s.pole[0], s.pole[1], s.pole[2], s.pole[3]}}};
  return j.dump(2) + "\n";
}

std::string scene_obj(const Scene& s) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "# " << (s.source.empty() ? "scene" : s.source) << ", pole ("
      << s.pole[0] << ", " << s.pole[1] << ", " << s.pole[2] << ", "
      << s.pole[3] << ")\n";
  size_t base = 1;
  std::vector<std::pair<size_t, size_t>> ranges;
  for (const auto& line : s.polylines) {
    for (const auto& p : line)
      out << "v " << p[0] << " " << p[1] << " " << p[2] << "\n";
    ranges.push_back({base, base + line.size() - 1});
    base += line.size();
  }
  for (const auto& [lo, hi] : ranges) {
    out << "l";
    for (size_t i = lo; i <= hi; ++i) out << " " << i;
    out << "\n";
  }
  return out.str();
}

std::vector<S3Point> model_points(const std::string& name) {
  if (name == "tesseract") return tesseract_points();
  if (name == "simplex4") return simplex4_points();
  if (name == "cube") return cube_points();
  if (name == "dodecahedron") return dodecahedron_points();
  if (name == "600cell") {
    std::vector<S3Point> out;
    for (const Quaternion& q : binary_group('I'))
      out.push_back(make_s3_point(q));
    return out;
  }
  throw DomainError("unknown model '" + name + "'");
}

}  // namespace msg
