#include "geovae/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

namespace geovae {

std::string format_double(double v) {
  char buf[40];
  // %.17g round-trips any double; trim to the shortest representation that
  // still round-trips so output stays readable and deterministic.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double Vec3::norm() const { return std::sqrt(norm2()); }

double TriMesh::triangle_area(int t) const {
  const Tri& tr = triangles[t];
  Vec3 e1 = vertices[tr[1]] - vertices[tr[0]];
  Vec3 e2 = vertices[tr[2]] - vertices[tr[0]];
  return 0.5 * e1.cross(e2).norm();
}

double TriMesh::surface_area() const {
  double a = 0;
  for (size_t t = 0; t < triangles.size(); ++t) a += triangle_area(static_cast<int>(t));
  return a;
}

double TriMesh::bbox_diagonal() const {
  if (vertices.empty()) return 0;
  Vec3 lo = vertices[0], hi = vertices[0];
  for (const Vec3& v : vertices) {
    lo.x = std::min(lo.x, v.x); lo.y = std::min(lo.y, v.y); lo.z = std::min(lo.z, v.z);
    hi.x = std::max(hi.x, v.x); hi.y = std::max(hi.y, v.y); hi.z = std::max(hi.z, v.z);
  }
  return (hi - lo).norm();
}

void TriMesh::validate() const {
  const int nv = static_cast<int>(vertices.size());
  std::set<std::array<int, 3>> seen;
  for (size_t t = 0; t < triangles.size(); ++t) {
    const Tri& tr = triangles[t];
    for (int k = 0; k < 3; ++k) {
      if (tr[k] < 0 || tr[k] >= nv) {
        throw ValidationError("triangle " + std::to_string(t) + " references vertex " +
                              std::to_string(tr[k]) + " out of range [0," +
                              std::to_string(nv) + ")");
      }
    }
    if (tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2]) {
      throw ValidationError("triangle " + std::to_string(t) + " repeats a vertex index");
    }
    std::array<int, 3> key = {tr[0], tr[1], tr[2]};
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) {
      throw ValidationError("duplicate triangle (" + std::to_string(tr[0]) + "," +
                            std::to_string(tr[1]) + "," + std::to_string(tr[2]) + ")");
    }
    if (triangle_area(static_cast<int>(t)) <= 1e-12) {
      throw ValidationError("degenerate triangle " + std::to_string(t) + " (" +
                            std::to_string(tr[0]) + "," + std::to_string(tr[1]) + "," +
                            std::to_string(tr[2]) + "): area <= 1e-12");
    }
  }
}

Quaternion Quaternion::from_raw(double w, double x, double y, double z) {
  double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (n < 1e-12) throw ValidationError("zero quaternion has no defined rotation");
  return {w / n, x / n, y / n, z / n};
}

Quaternion Quaternion::from_axis_angle(const Vec3& axis, double angle) {
  double n = axis.norm();
  if (n < 1e-12) throw ValidationError("zero rotation axis");
  double s = std::sin(angle / 2) / n;
  return {std::cos(angle / 2), axis.x * s, axis.y * s, axis.z * s};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {w * o.w - x * o.x - y * o.y - z * o.z,
          w * o.x + x * o.w + y * o.z - z * o.y,
          w * o.y - x * o.z + y * o.w + z * o.x,
          w * o.z + x * o.y - y * o.x + z * o.w};
}

Mat3 quat_to_matrix(const Quaternion& q_in) {
  Quaternion q = Quaternion::from_raw(q_in.w, q_in.x, q_in.y, q_in.z);
  double w = q.w, x = q.x, y = q.y, z = q.z;
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
           {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
           {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

double quat_distance(const Quaternion& a, const Quaternion& b) {
  Quaternion qa = Quaternion::from_raw(a.w, a.x, a.y, a.z);
  Quaternion qb = Quaternion::from_raw(b.w, b.x, b.y, b.z);
  double d = 1.0 - std::abs(qa.dot(qb));
  return std::clamp(d, 0.0, 1.0);
}

Vec3 rotate_point(const Vec3& p, const Mat3& m) {
  // row vector times matrix
  return {p.x * m[0][0] + p.y * m[1][0] + p.z * m[2][0],
          p.x * m[0][1] + p.y * m[1][1] + p.z * m[2][1],
          p.x * m[0][2] + p.y * m[1][2] + p.z * m[2][2]};
}

PointCloud rotate_cloud(const PointCloud& pc, const Quaternion& q) {
  Mat3 m = quat_to_matrix(q);
  PointCloud out;
  out.points.reserve(pc.points.size());
  for (const Vec3& p : pc.points) out.points.push_back(rotate_point(p, m));
  return out;
}

PointCloud translate_cloud(const PointCloud& pc, const Vec3& t) {
  PointCloud out;
  out.points.reserve(pc.points.size());
  for (const Vec3& p : pc.points) out.points.push_back(p + t);
  return out;
}

PointCloud scale_cloud(const PointCloud& pc, double s) {
  PointCloud out;
  out.points.reserve(pc.points.size());
  for (const Vec3& p : pc.points) out.points.push_back(p * s);
  return out;
}

PointCloud sample_surface(const TriMesh& mesh, int n, uint64_t seed) {
  if (mesh.triangles.empty()) throw ValidationError("cannot sample an empty mesh");
  if (n < 1) throw ValidationError("sample count must be >= 1");

  std::vector<double> cumulative(mesh.triangles.size());
  double total = 0;
  for (size_t t = 0; t < mesh.triangles.size(); ++t) {
    total += mesh.triangle_area(static_cast<int>(t));
    cumulative[t] = total;
  }
  if (total <= 0) throw ValidationError("mesh has zero total area");

  Rng rng(seed);
  PointCloud out;
  out.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform() * total;
    size_t t = std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
    if (t >= mesh.triangles.size()) t = mesh.triangles.size() - 1;
    double b1 = rng.uniform();
    double b2 = rng.uniform();
    if (b1 + b2 > 1) {  // reflect into the triangle
      b1 = 1 - b1;
      b2 = 1 - b2;
    }
    const Tri& tr = mesh.triangles[t];
    Vec3 a = mesh.vertices[tr[0]];
    Vec3 e1 = mesh.vertices[tr[1]] - a;
    Vec3 e2 = mesh.vertices[tr[2]] - a;
    out.points.push_back(a + e1 * b1 + e2 * b2);
  }
  return out;
}

Quaternion random_height_rotation(double theta_min, double theta_max, uint64_t seed,
                                  const Vec3& height_axis) {
  if (theta_min > theta_max) throw ValidationError("rotation range has theta_min > theta_max");
  Rng rng(seed);
  double theta = rng.uniform(theta_min, theta_max);
  return Quaternion::from_axis_angle(height_axis, theta);
}

double height_rotation_angle(const Quaternion& q, const Vec3& axis) {
  Vec3 a = axis * (1.0 / axis.norm());
  double s = q.x * a.x + q.y * a.y + q.z * a.z;
  double theta = 2.0 * std::atan2(s, q.w);
  theta = std::fmod(theta, 2 * M_PI);
  if (theta < 0) theta += 2 * M_PI;
  return theta;
}

}  // namespace geovae
