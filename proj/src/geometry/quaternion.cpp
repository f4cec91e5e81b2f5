/* Copyright 2026 The Percept Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "percept/geometry/quaternion.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "percept/error.hpp"

namespace percept {
namespace {

Quaternion canonicalize(Quaternion q) {
  bool flip = false;
  if (q.w < 0.0) {
    flip = true;
  } else if (q.w == 0.0) {
    if (q.x != 0.0) {
      flip = q.x < 0.0;
    } else if (q.y != 0.0) {
      flip = q.y < 0.0;
    } else {
      flip = q.z < 0.0;
    }
  }
  if (flip) {
    q.w = -q.w;
    q.x = -q.x;
    q.y = -q.y;
    q.z = -q.z;
  }
  return q;
}

}  // namespace

double quaternion_norm(const Quaternion& q) {
  return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

Quaternion quaternion_normalize(const Quaternion& q) {
  const double n = quaternion_norm(q);
  if (n <= 1e-12)
    throw Error(ErrorCode::kZeroNorm, "quaternion norm is (near) zero");
  return canonicalize({q.w / n, q.x / n, q.y / n, q.z / n});
}

Quaternion quaternion_conjugate(const Quaternion& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

Quaternion quaternion_multiply(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Eigen::Matrix3d quaternion_to_matrix(const Quaternion& q) {
  if (std::fabs(quaternion_norm(q) - 1.0) > 1e-6)
    throw Error(ErrorCode::kNotUnit, "quaternion must be unit length");
  const double xx = q.x * q.x, yy = q.y * q.y, zz = q.z * q.z;
  const double xy = q.x * q.y, xz = q.x * q.z, yz = q.y * q.z;
  const double wx = q.w * q.x, wy = q.w * q.y, wz = q.w * q.z;
  Eigen::Matrix3d rotation;
  rotation << 1.0 - 2.0 * (yy + zz), 2.0 * (xy - wz), 2.0 * (xz + wy),
              2.0 * (xy + wz), 1.0 - 2.0 * (xx + zz), 2.0 * (yz - wx),
              2.0 * (xz - wy), 2.0 * (yz + wx), 1.0 - 2.0 * (xx + yy);
  return rotation;
}

Quaternion matrix_to_quaternion(const Eigen::Matrix3d& m) {
  const Eigen::Matrix3d gram = m * m.transpose();
  if ((gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-6 ||
      m.determinant() <= 0.0)
    throw Error(ErrorCode::kNotARotation, "matrix is not a proper rotation");

  // Shepperd's method: branch on the largest of trace and diagonal entries.
  const double trace = m.trace();
  Quaternion q;
  if (trace >= m(0, 0) && trace >= m(1, 1) && trace >= m(2, 2)) {
    const double s = std::sqrt(trace + 1.0) * 2.0;
    q.w = 0.25 * s;
    q.x = (m(2, 1) - m(1, 2)) / s;
    q.y = (m(0, 2) - m(2, 0)) / s;
    q.z = (m(1, 0) - m(0, 1)) / s;
  } else if (m(0, 0) >= m(1, 1) && m(0, 0) >= m(2, 2)) {
    const double s = std::sqrt(1.0 + m(0, 0) - m(1, 1) - m(2, 2)) * 2.0;
    q.w = (m(2, 1) - m(1, 2)) / s;
    q.x = 0.25 * s;
    q.y = (m(0, 1) + m(1, 0)) / s;
    q.z = (m(0, 2) + m(2, 0)) / s;
  } else if (m(1, 1) >= m(2, 2)) {
    const double s = std::sqrt(1.0 + m(1, 1) - m(0, 0) - m(2, 2)) * 2.0;
    q.w = (m(0, 2) - m(2, 0)) / s;
    q.x = (m(0, 1) + m(1, 0)) / s;
    q.y = 0.25 * s;
    q.z = (m(1, 2) + m(2, 1)) / s;
  } else {
    const double s = std::sqrt(1.0 + m(2, 2) - m(0, 0) - m(1, 1)) * 2.0;
    q.w = (m(1, 0) - m(0, 1)) / s;
    q.x = (m(0, 2) + m(2, 0)) / s;
    q.y = (m(1, 2) + m(2, 1)) / s;
    q.z = 0.25 * s;
  }
  return quaternion_normalize(q);
}

Quaternion axis_angle_to_quaternion(const Eigen::Vector3d& axis, double angle) {
  const double n = axis.norm();
  if (n <= 1e-12) throw Error(ErrorCode::kZeroAxis, "rotation axis is (near) zero");
  const Eigen::Vector3d unit = axis / n;
  const double half = angle / 2.0;
  const double s = std::sin(half);
  return quaternion_normalize({std::cos(half), unit.x() * s, unit.y() * s, unit.z() * s});
}

double quaternion_angle(const Quaternion& a, const Quaternion& b) {
  const double dot =
      std::fabs(a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z);
  return 2.0 * std::acos(std::min(dot, 1.0));
}

}  // namespace percept
