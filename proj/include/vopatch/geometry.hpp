/*
 * Copyright (c) 2026  The vopatch authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cmath>
#include <numbers>
#include <span>
#include <utility>

#include "vopatch/error.hpp"

namespace vopatch {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
using Vec3 = Vector3<double>;

/// Rotation group element stored as a unit quaternion. The constructor
/// normalizes and canonicalizes the double cover so that w >= 0; two
/// RotationSO3 representing the same rotation compare coefficient-equal.
template <typename Scalar>
class Rotation {
 public:
  using Quaternion = Eigen::Quaternion<Scalar>;
  using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

  Rotation() : q_(Quaternion::Identity()) {}

  explicit Rotation(const Quaternion& q) : q_(q.normalized()) { canonicalize(); }

  explicit Rotation(const Matrix3& m) : q_(Quaternion(m).normalized()) {
    canonicalize();
  }

  static Rotation identity() { return Rotation(); }

  /// Rotation of `angle_rad` about a (not necessarily unit) axis.
  static Rotation axis_angle(const Vector3<Scalar>& axis, Scalar angle_rad) {
    return Rotation(Quaternion(Eigen::AngleAxis<Scalar>(angle_rad, axis.normalized())));
  }

  const Quaternion& quaternion() const { return q_; }
  Matrix3 matrix() const { return q_.toRotationMatrix(); }

  Rotation inverse() const { return Rotation(q_.conjugate()); }

  Vector3<Scalar> operator*(const Vector3<Scalar>& v) const { return q_ * v; }
  Rotation operator*(const Rotation& other) const { return Rotation(q_ * other.q_); }

  bool isApprox(const Rotation& other, Scalar tol = Scalar(1e-12)) const {
    return q_.coeffs().isApprox(other.q_.coeffs(), tol) ||
           q_.coeffs().isApprox(-other.q_.coeffs(), tol);
  }

 private:
  void canonicalize() {
    if (q_.w() < Scalar(0)) q_.coeffs() = -q_.coeffs();
  }
  Quaternion q_;
};

using RotationSO3 = Rotation<double>;

/// Rigid camera motion (rotation + translation). Composition matches the
/// product of the corresponding 4x4 homogeneous matrices.
template <typename Scalar>
struct RigidMotion {
  Rotation<Scalar> rotation;
  Vector3<Scalar> translation = Vector3<Scalar>::Zero();

  RigidMotion() = default;
  RigidMotion(const Rotation<Scalar>& r, const Vector3<Scalar>& t)
      : rotation(r), translation(t) {}

  static RigidMotion identity() { return RigidMotion(); }

  Vector3<Scalar> operator*(const Vector3<Scalar>& p) const {
    return rotation * p + translation;
  }
};

using MotionSE3 = RigidMotion<double>;

template <typename Scalar>
RigidMotion<Scalar> compose(const RigidMotion<Scalar>& a, const RigidMotion<Scalar>& b) {
  return {a.rotation * b.rotation, a.rotation * b.translation + a.translation};
}

template <typename Scalar>
RigidMotion<Scalar> invert(const RigidMotion<Scalar>& m) {
  const Rotation<Scalar> rinv = m.rotation.inverse();
  return {rinv, -(rinv * m.translation)};
}

/// Left fold of compose over the list; the empty list gives the identity.
template <typename Scalar>
RigidMotion<Scalar> accumulate(std::span<const RigidMotion<Scalar>> motions) {
  RigidMotion<Scalar> acc;
  for (const auto& m : motions) acc = compose(acc, m);
  return acc;
}

inline MotionSE3 accumulate(std::span<const MotionSE3> motions) {
  return accumulate<double>(motions);
}

template <typename Scalar>
Vector3<Scalar> translation(const RigidMotion<Scalar>& m) {
  return m.translation;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> to_matrix4(const RigidMotion<Scalar>& m) {
  Eigen::Matrix<Scalar, 4, 4> out = Eigen::Matrix<Scalar, 4, 4>::Identity();
  out.template topLeftCorner<3, 3>() = m.rotation.matrix();
  out.template topRightCorner<3, 1>() = m.translation;
  return out;
}

template <typename Scalar>
RigidMotion<Scalar> from_matrix4(const Eigen::Matrix<Scalar, 4, 4>& m) {
  return {Rotation<Scalar>(Eigen::Matrix<Scalar, 3, 3>(m.template topLeftCorner<3, 3>())),
          Vector3<Scalar>(m.template topRightCorner<3, 1>())};
}

/// Pinhole camera; pixel centers sit at integer + 0.5 coordinates.
struct CameraIntrinsics {
  double fx = 0.0, fy = 0.0, cx = 0.0, cy = 0.0;
  int width = 0, height = 0;

  static CameraIntrinsics from_hfov(double hfov_deg, int width, int height) {
    CameraIntrinsics k;
    k.width = width;
    k.height = height;
    const double half = 0.5 * hfov_deg * std::numbers::pi / 180.0;
    k.fx = (width / 2.0) / std::tan(half);
    k.fy = k.fx;
    k.cx = width / 2.0;
    k.cy = height / 2.0;
    return k;
  }

  double horizontal_fov_deg() const {
    return 2.0 * std::atan((width / 2.0) / fx) * 180.0 / std::numbers::pi;
  }

  /// Projects a camera-frame point with positive depth to pixel coordinates.
  Eigen::Vector2d project(const Vec3& p_cam) const {
    return {fx * p_cam.x() / p_cam.z() + cx, fy * p_cam.y() / p_cam.z() + cy};
  }

  CameraIntrinsics scaled(double factor) const {
    CameraIntrinsics k = *this;
    k.fx *= factor;
    k.fy *= factor;
    k.cx *= factor;
    k.cy *= factor;
    k.width = static_cast<int>(std::lround(width * factor));
    k.height = static_cast<int>(std::lround(height * factor));
    return k;
  }
};

/// World-space rectangle carrying the patch texture. basis_u and basis_v are
/// orthonormal directions; extent_* are the physical side lengths in meters.
struct PatchPlane {
  Vec3 origin = Vec3::Zero();
  Vec3 basis_u = Vec3::UnitX();
  Vec3 basis_v = Vec3::UnitY();
  double extent_u = 1.0;
  double extent_v = 1.0;

  Vec3 normal() const { return basis_u.cross(basis_v).normalized(); }
  Vec3 point_at(double s, double t) const {
    return origin + s * basis_u + t * basis_v;
  }
  Vec3 center() const {
    return point_at(0.5 * extent_u, 0.5 * extent_v);
  }
};

/// 3x3 projective map from patch pixel coordinates (u, v) in
/// [0, w_p] x [0, h_p] to image pixel coordinates.
using Homography = Eigen::Matrix3d;

/// Builds the homography sending patch pixels onto the image for a camera at
/// `camera_pose` (camera-to-world). Throws PlaneBehindCamera when any patch
/// corner has non-positive depth in the camera frame.
inline Homography homography_for_plane(const MotionSE3& camera_pose,
                                       const PatchPlane& plane,
                                       const CameraIntrinsics& intr,
                                       int patch_width, int patch_height) {
  const MotionSE3 world_to_cam = invert(camera_pose);
  const Eigen::Matrix3d r = world_to_cam.rotation.matrix();
  const Vec3 t = world_to_cam.translation;

  const double corners[4][2] = {{0.0, 0.0},
                                {static_cast<double>(patch_width), 0.0},
                                {0.0, static_cast<double>(patch_height)},
                                {static_cast<double>(patch_width),
                                 static_cast<double>(patch_height)}};
  for (const auto& c : corners) {
    const Vec3 world = plane.point_at(c[0] / patch_width * plane.extent_u,
                                      c[1] / patch_height * plane.extent_v);
    const Vec3 cam = r * world + t;
    if (cam.z() <= 0.0)
      throw PlaneBehindCamera("patch corner at non-positive depth");
  }

  Eigen::Matrix3d k;
  k << intr.fx, 0.0, intr.cx, 0.0, intr.fy, intr.cy, 0.0, 0.0, 1.0;

  Eigen::Matrix3d plane_to_cam;
  plane_to_cam.col(0) = r * plane.basis_u * (plane.extent_u / patch_width);
  plane_to_cam.col(1) = r * plane.basis_v * (plane.extent_v / patch_height);
  plane_to_cam.col(2) = r * plane.origin + t;
  return k * plane_to_cam;
}

}  // namespace vopatch
