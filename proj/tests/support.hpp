#pragma once

// Shared helpers for the test suite: seeded random generators, random
// rotations, and scale-aware floating-point comparison.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "fit3d/point_cloud.hpp"
#include "fit3d/sym_mat3.hpp"
#include "fit3d/vec3.hpp"

namespace fit3d::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec3 random_vec(Rng& rng, double lo, double hi) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline Vec3 random_unit(Rng& rng) {
    std::normal_distribution<double> gauss;
    while (true) {
        const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        const double len = norm(v);
        if (len > 1e-6) return v / len;
    }
}

inline PointCloud random_cloud(Rng& rng, std::size_t n, double lo, double hi) {
    PointCloud cloud;
    cloud.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cloud.points.push_back(random_vec(rng, lo, hi));
    return cloud;
}

struct Rot3 {
    std::array<std::array<double, 3>, 3> m{};

    Vec3 row(std::size_t i) const { return {m[i][0], m[i][1], m[i][2]}; }
    Vec3 apply(const Vec3& v) const {
        return {dot(row(0), v), dot(row(1), v), dot(row(2), v)};
    }
};

/// Uniformly random rotation from a random unit quaternion.
inline Rot3 random_rotation(Rng& rng) {
    std::normal_distribution<double> gauss;
    double w, x, y, z, len2;
    do {
        w = gauss(rng);
        x = gauss(rng);
        y = gauss(rng);
        z = gauss(rng);
        len2 = w * w + x * x + y * y + z * z;
    } while (len2 < 1e-12);
    const double s = 1.0 / std::sqrt(len2);
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    Rot3 r;
    r.m = {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
            {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
            {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
    return r;
}

/// B = R * M * R^T as a symmetric matrix.
inline SymMat3 conjugate(const Rot3& r, const SymMat3& m) {
    SymMat3 b;
    b.m11 = dot(r.row(0), m.apply(r.row(0)));
    b.m12 = dot(r.row(0), m.apply(r.row(1)));
    b.m13 = dot(r.row(0), m.apply(r.row(2)));
    b.m22 = dot(r.row(1), m.apply(r.row(1)));
    b.m23 = dot(r.row(1), m.apply(r.row(2)));
    b.m33 = dot(r.row(2), m.apply(r.row(2)));
    return b;
}

inline PointCloud transformed(const PointCloud& cloud, const Rot3& r, const Vec3& shift) {
    PointCloud out;
    out.points.reserve(cloud.size());
    for (const Vec3& p : cloud.points) out.points.push_back(r.apply(p) + shift);
    return out;
}

/// |a - b| <= tol * max(|a|, |b|, floor)
inline bool rel_close(double a, double b, double tol, double floor = 0.0) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), floor});
}

/// Angle between undirected lines spanned by u and v, in radians.
inline double line_angle(const Vec3& u, const Vec3& v) {
    return std::atan2(norm(cross(u, v)), std::abs(dot(u, v)));
}

inline double max_pairwise_distance(const PointCloud& cloud) {
    double best = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i)
        for (std::size_t j = i + 1; j < cloud.size(); ++j)
            best = std::max(best, norm(cloud.points[i] - cloud.points[j]));
    return best;
}

}  // namespace fit3d::testing
