#pragma once

#include "fit3d/line.hpp"
#include "fit3d/point_cloud.hpp"
#include "fit3d/sym_mat3.hpp"
#include "fit3d/vec3.hpp"

namespace fit3d {

/// Arithmetic mean of the point positions (center of mass with unit weights).
Vec3 centroid(const PointCloud& cloud);

/// Second-moment form of the centered points: with s_i = r_i - centroid,
///
///   M = (1/n) * sum_i (|s_i|^2 * I - s_i s_i^T).
///
/// For any unit direction a, a^T M a is the mean squared distance of the points
/// from the best line with that direction, so the best over all directions is the
/// eigenvector of the smallest eigenvalue. M is positive semidefinite and coincides
/// with the inertia tensor of unit masses placed at the centered points.
///
/// Accumulated in two passes (centroid first, then the six entries); the diagonal
/// entries are sums of squares of the complementary components, which keeps them
/// exact for clouds that are flat along a coordinate plane.
SymMat3 nonlinearity_matrix(const PointCloud& cloud);

/// The moment vector minimizing the mean squared residual for a fixed unit
/// direction a: (1/n) * sum_i cross(r_i, a), which equals cross(centroid, a).
Vec3 optimal_moment(const PointCloud& cloud, const Vec3& a);

/// Mean of squared point-to-line distances, evaluated in moment form:
/// (1/n) * sum_i |cross(r_i, a) - b|^2.
double mean_square_distance(const PointCloud& cloud, const LineMoment& line);

}  // namespace fit3d
