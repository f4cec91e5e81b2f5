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

#pragma once

#include <Eigen/Core>

namespace percept {

/// Rotation quaternion, component order (w, x, y, z). Unit quaternions in
/// canonical form have w >= 0; when w == 0 the first nonzero of x, y, z is
/// positive. Canonicalization removes the q / -q double-cover ambiguity.
struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Quaternion&) const = default;
};

double quaternion_norm(const Quaternion& q);

/// Unit quaternion with canonical sign. Throws ZeroNorm when the norm is
/// below 1e-12.
Quaternion quaternion_normalize(const Quaternion& q);

Quaternion quaternion_conjugate(const Quaternion& q);

/// Hamilton product a * b: rotating by the result applies b first, then a.
Quaternion quaternion_multiply(const Quaternion& a, const Quaternion& b);

/// Rotation matrix of a unit quaternion. Throws NotUnit when the norm
/// deviates from 1 by more than 1e-6.
Eigen::Matrix3d quaternion_to_matrix(const Quaternion& q);

/// Canonical unit quaternion of a rotation matrix, using the
/// largest-diagonal branch so near-180-degree rotations stay stable.
/// Throws NotARotation unless R is orthonormal within 1e-6 with
/// positive determinant.
Quaternion matrix_to_quaternion(const Eigen::Matrix3d& rotation);

/// Unit quaternion for a rotation of `angle` radians about `axis` (the
/// axis is normalized internally). Throws ZeroAxis for a near-zero axis.
Quaternion axis_angle_to_quaternion(const Eigen::Vector3d& axis, double angle);

/// Geodesic angle (radians, in [0, pi]) between the rotations two unit
/// quaternions represent.
double quaternion_angle(const Quaternion& a, const Quaternion& b);

}  // namespace percept
