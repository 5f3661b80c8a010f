#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "geovae/common.hpp"

namespace geovae {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const;
  double norm2() const { return dot(*this); }
};

using Tri = std::array<int, 3>;

// Triangle mesh. Validation (index range, degenerate faces, duplicate faces)
// happens in validate(); loaders call it before returning.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<Tri> triangles;

  // Throws ValidationError on out-of-range indices, duplicate triangles, or
  // any face with area <= 1e-12.
  void validate() const;
  double triangle_area(int t) const;
  double surface_area() const;
  // Length of the axis-aligned bounding box diagonal.
  double bbox_diagonal() const;
};

// Unordered 3D point set. Order carries no meaning; every consumer must be
// permutation-invariant.
struct PointCloud {
  std::vector<Vec3> points;

  size_t size() const { return points.size(); }
};

// Unit quaternion in (w,x,y,z) order. Construction normalizes; a zero input
// is rejected (no rotation is defined for it). q and -q encode the same
// rotation.
struct Quaternion {
  double w = 1, x = 0, y = 0, z = 0;

  static Quaternion identity() { return {1, 0, 0, 0}; }
  // Normalizes; throws ValidationError if the raw vector is (numerically) zero.
  static Quaternion from_raw(double w, double x, double y, double z);
  static Quaternion from_axis_angle(const Vec3& axis, double angle);

  Quaternion operator*(const Quaternion& o) const;  // Hamilton product
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  double dot(const Quaternion& o) const { return w * o.w + x * o.x + y * o.y + z * o.z; }
};

using Mat3 = std::array<std::array<double, 3>, 3>;

// Rotation matrix of the (normalized) quaternion. Orthogonal, det = +1.
Mat3 quat_to_matrix(const Quaternion& q);

// 1 - |q . q~| in [0,1]; a metric on rotations (absorbs the double cover).
double quat_distance(const Quaternion& a, const Quaternion& b);

// Each point is treated as a row vector and right-multiplied by the rotation
// matrix, so rotate(rotate(P,q1),q2) == rotate(P, q1*q2).
PointCloud rotate_cloud(const PointCloud& pc, const Quaternion& q);
Vec3 rotate_point(const Vec3& p, const Mat3& m);

// Area-weighted surface sampling: triangle chosen with probability
// proportional to area, position uniform in barycentric coordinates.
PointCloud sample_surface(const TriMesh& mesh, int n, uint64_t seed);

// Rotation about the height axis (+y by convention, configurable) with angle
// uniform in [theta_min, theta_max].
Quaternion random_height_rotation(double theta_min, double theta_max, uint64_t seed,
                                  const Vec3& height_axis = {0, 1, 0});

// Signed rotation angle about +axis recovered from q, wrapped to [0, 2*pi).
double height_rotation_angle(const Quaternion& q, const Vec3& axis = {0, 1, 0});

PointCloud translate_cloud(const PointCloud& pc, const Vec3& t);
PointCloud scale_cloud(const PointCloud& pc, double s);

}  // namespace geovae
