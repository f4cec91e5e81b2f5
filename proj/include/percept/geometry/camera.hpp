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

#include <filesystem>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "percept/geometry/quaternion.hpp"

namespace percept {

/// Pinhole camera, no distortion. Focal lengths and principal point are
/// in pixels; fx, fy must be positive.
struct CameraIntrinsics {
  double fx = 1.0;
  double fy = 1.0;
  double cx = 0.0;
  double cy = 0.0;
};

/// Rigid transform from object frame to camera frame: p_cam = R * p + t.
struct Pose {
  Quaternion rotation;
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
};

/// Projects object-frame points to pixels: u = fx * x/z + cx,
/// v = fy * y/z + cy after the pose transform. Throws BehindCamera
/// (naming the offending index) when a transformed point has z <= 1e-9.
std::vector<Eigen::Vector2d> project_points(std::span<const Eigen::Vector3d> points,
                                            const Pose& pose,
                                            const CameraIntrinsics& camera);

/// Pose from 3D-2D correspondences via normalized DLT: intrinsics are
/// removed first, both point sets are Hartley-normalized, the 2Kx12
/// system is solved by the smallest singular vector, and the rotation
/// block is projected to the nearest rotation (orthogonal Procrustes)
/// with the sign fixed so points lie in front of the camera. Exact on
/// noiseless input.
///
/// Throws InsufficientPoints when K < 6 and DegenerateConfiguration when
/// the 3D points are (near-)coplanar — smallest covariance eigenvalue
/// below 1e-10 times the largest — or when the DLT system is
/// ill-conditioned (ratio of the two smallest singular values > 0.99).
Pose solve_pnp_dlt(std::span<const Eigen::Vector3d> points3d,
                   std::span<const Eigen::Vector2d> points2d,
                   const CameraIntrinsics& camera);

/// Intrinsics file format: {"fx": f, "fy": f, "cx": f, "cy": f}.
CameraIntrinsics load_intrinsics(const std::filesystem::path& path);

}  // namespace percept
