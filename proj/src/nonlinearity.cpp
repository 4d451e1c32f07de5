#include "fit3d/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>

namespace fit3d {

namespace {

void require_nonempty(const PointCloud& cloud) {
    if (cloud.empty()) throw std::invalid_argument("empty point cloud");
}

}  // namespace

Vec3 centroid(const PointCloud& cloud) {
    require_nonempty(cloud);
    Vec3 sum;
    for (const Vec3& p : cloud.points) sum += p;
    return sum / static_cast<double>(cloud.size());
}

SymMat3 nonlinearity_matrix(const PointCloud& cloud) {
    const Vec3 c = centroid(cloud);
    SymMat3 m;
    for (const Vec3& p : cloud.points) {
        const Vec3 s = p - c;
        m.m11 += s.y * s.y + s.z * s.z;
        m.m22 += s.x * s.x + s.z * s.z;
        m.m33 += s.x * s.x + s.y * s.y;
        m.m12 -= s.x * s.y;
        m.m13 -= s.x * s.z;
        m.m23 -= s.y * s.z;
    }
    const double inv_n = 1.0 / static_cast<double>(cloud.size());
    m.m11 *= inv_n;
    m.m12 *= inv_n;
    m.m13 *= inv_n;
    m.m22 *= inv_n;
    m.m23 *= inv_n;
    m.m33 *= inv_n;
    return m;
}

Vec3 optimal_moment(const PointCloud& cloud, const Vec3& a) {
    require_nonempty(cloud);
    if (std::abs(norm(a) - 1.0) > 1e-12) throw std::invalid_argument("direction must be unit");
    Vec3 sum;
    for (const Vec3& p : cloud.points) sum += cross(p, a);
    return sum / static_cast<double>(cloud.size());
}

double mean_square_distance(const PointCloud& cloud, const LineMoment& line) {
    require_nonempty(cloud);
    double acc = 0.0;
    for (const Vec3& p : cloud.points)
        acc += norm_squared(cross(p, line.direction()) - line.moment());
    return acc / static_cast<double>(cloud.size());
}

}  // namespace fit3d
