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

#include "percept/geometry/camera.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <nlohmann/json.hpp>

#include "percept/error.hpp"

namespace percept {

std::vector<Eigen::Vector2d> project_points(std::span<const Eigen::Vector3d> points,
                                            const Pose& pose,
                                            const CameraIntrinsics& camera) {
  const Eigen::Matrix3d rotation = quaternion_to_matrix(pose.rotation);
  std::vector<Eigen::Vector2d> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Eigen::Vector3d p = rotation * points[i] + pose.translation;
    if (p.z() <= 1e-9)
      throw Error(ErrorCode::kBehindCamera,
                  "point " + std::to_string(i) + " is behind the camera (z = " +
                      std::to_string(p.z()) + ")");
    out.emplace_back(camera.fx * p.x() / p.z() + camera.cx,
                     camera.fy * p.y() / p.z() + camera.cy);
  }
  return out;
}

namespace {

struct Normalization2d {
  Eigen::Matrix3d transform;
  std::vector<Eigen::Vector2d> points;
};

struct Normalization3d {
  Eigen::Matrix4d transform;
  std::vector<Eigen::Vector3d> points;
};

// Hartley normalization: centroid to the origin, mean distance sqrt(dim).
Normalization2d normalize_2d(std::span<const Eigen::Vector2d> points) {
  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  for (const auto& p : points) centroid += p;
  centroid /= static_cast<double>(points.size());
  double mean_dist = 0.0;
  for (const auto& p : points) mean_dist += (p - centroid).norm();
  mean_dist /= static_cast<double>(points.size());
  const double scale = mean_dist > 0.0 ? std::sqrt(2.0) / mean_dist : 1.0;

  Normalization2d result;
  result.transform = Eigen::Matrix3d::Identity();
  result.transform(0, 0) = scale;
  result.transform(1, 1) = scale;
  result.transform(0, 2) = -scale * centroid.x();
  result.transform(1, 2) = -scale * centroid.y();
  result.points.reserve(points.size());
  for (const auto& p : points) result.points.push_back((p - centroid) * scale);
  return result;
}

Normalization3d normalize_3d(std::span<const Eigen::Vector3d> points) {
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : points) centroid += p;
  centroid /= static_cast<double>(points.size());
  double mean_dist = 0.0;
  for (const auto& p : points) mean_dist += (p - centroid).norm();
  mean_dist /= static_cast<double>(points.size());
  const double scale = mean_dist > 0.0 ? std::sqrt(3.0) / mean_dist : 1.0;

  Normalization3d result;
  result.transform = Eigen::Matrix4d::Identity();
  result.transform.topLeftCorner<3, 3>() *= scale;
  result.transform.topRightCorner<3, 1>() = -scale * centroid;
  result.points.reserve(points.size());
  for (const auto& p : points) result.points.push_back((p - centroid) * scale);
  return result;
}

}  // namespace

Pose solve_pnp_dlt(std::span<const Eigen::Vector3d> points3d,
                   std::span<const Eigen::Vector2d> points2d,
                   const CameraIntrinsics& camera) {
  if (points3d.size() != points2d.size())
    throw Error(ErrorCode::kLengthMismatch, "solve_pnp_dlt: 3D and 2D point counts differ");
  const std::size_t count = points3d.size();
  if (count < 6)
    throw Error(ErrorCode::kInsufficientPoints,
                "solve_pnp_dlt needs at least 6 points, got " + std::to_string(count));

  // Coplanarity check on the 3D covariance spectrum.
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : points3d) centroid += p;
  centroid /= static_cast<double>(count);
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();
  for (const auto& p : points3d) {
    const Eigen::Vector3d d = p - centroid;
    covariance += d * d.transpose();
  }
  covariance /= static_cast<double>(count);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eigen(covariance);
  const double smallest = eigen.eigenvalues()(0);
  const double largest = eigen.eigenvalues()(2);
  if (largest <= 0.0 || smallest < 1e-10 * largest)
    throw Error(ErrorCode::kDegenerateConfiguration, "3D points are (near-)coplanar");

  // Intrinsics-normalized rays.
  std::vector<Eigen::Vector2d> rays;
  rays.reserve(count);
  for (const auto& p : points2d)
    rays.emplace_back((p.x() - camera.cx) / camera.fx, (p.y() - camera.cy) / camera.fy);

  const Normalization2d n2 = normalize_2d(rays);
  const Normalization3d n3 = normalize_3d(points3d);

  Eigen::MatrixXd system(2 * count, 12);
  for (std::size_t i = 0; i < count; ++i) {
    const Eigen::Vector3d& object = n3.points[i];
    const Eigen::Vector2d& ray = n2.points[i];
    system.row(2 * i) << object.x(), object.y(), object.z(), 1.0, 0.0, 0.0, 0.0, 0.0,
        -ray.x() * object.x(), -ray.x() * object.y(), -ray.x() * object.z(), -ray.x();
    system.row(2 * i + 1) << 0.0, 0.0, 0.0, 0.0, object.x(), object.y(), object.z(), 1.0,
        -ray.y() * object.x(), -ray.y() * object.y(), -ray.y() * object.z(), -ray.y();
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const auto& singular = svd.singularValues();
  const double sigma_last = singular(singular.size() - 1);
  const double sigma_prev = singular(singular.size() - 2);
  if (sigma_prev <= 0.0 || sigma_last / sigma_prev > 0.99)
    throw Error(ErrorCode::kDegenerateConfiguration,
                "DLT system is rank deficient (degenerate point configuration)");

  const Eigen::VectorXd h = svd.matrixV().col(11);
  Eigen::Matrix<double, 3, 4> projection_normalized;
  projection_normalized << h(0), h(1), h(2), h(3),
                           h(4), h(5), h(6), h(7),
                           h(8), h(9), h(10), h(11);

  // Undo both normalizations.
  Eigen::Matrix<double, 3, 4> projection =
      n2.transform.inverse() * projection_normalized * n3.transform;

  // Fix the global sign so depths come out positive.
  int negative_depths = 0;
  for (const auto& p : points3d) {
    const double depth = projection.row(2) * p.homogeneous();
    if (depth < 0.0) ++negative_depths;
  }
  if (negative_depths * 2 > static_cast<int>(count)) projection = -projection;

  // Nearest rotation to the 3x3 block (orthogonal Procrustes).
  const Eigen::Matrix3d m = projection.topLeftCorner<3, 3>();
  Eigen::JacobiSVD<Eigen::Matrix3d> procrustes(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double det_sign =
      (procrustes.matrixU() * procrustes.matrixV().transpose()).determinant() < 0.0 ? -1.0 : 1.0;
  const Eigen::Matrix3d rotation = procrustes.matrixU() *
                                   Eigen::Vector3d(1.0, 1.0, det_sign).asDiagonal() *
                                   procrustes.matrixV().transpose();
  const auto& sv = procrustes.singularValues();
  const double scale = (sv(0) + sv(1) + det_sign * sv(2)) / 3.0;
  if (scale <= 0.0)
    throw Error(ErrorCode::kDegenerateConfiguration, "recovered projection has no positive scale");

  Pose pose;
  pose.rotation = matrix_to_quaternion(rotation);
  pose.translation = projection.col(3) / scale;
  return pose;
}

CameraIntrinsics load_intrinsics(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
  for (const char* key : {"fx", "fy", "cx", "cy"})
    if (!doc.contains(key) || !doc.at(key).is_number())
      throw Error(ErrorCode::kSchemaViolation,
                  path.string() + ": missing numeric field \"" + key + "\"");
  CameraIntrinsics camera{doc.at("fx").get<double>(), doc.at("fy").get<double>(),
                          doc.at("cx").get<double>(), doc.at("cy").get<double>()};
  if (camera.fx <= 0.0 || camera.fy <= 0.0)
    throw Error(ErrorCode::kSchemaViolation, "focal lengths must be positive");
  return camera;
}

}  // namespace percept
