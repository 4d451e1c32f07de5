#pragma once

#include <cmath>
#include <cstddef>

#include "fit3d/vec3.hpp"

namespace fit3d {

/// Symmetric 3x3 matrix; only the upper triangle is stored.
struct SymMat3 {
    double m11 = 0.0;
    double m12 = 0.0;
    double m13 = 0.0;
    double m22 = 0.0;
    double m23 = 0.0;
    double m33 = 0.0;

    constexpr double operator()(std::size_t i, std::size_t j) const {
        if (i > j) {
            const std::size_t t = i;
            i = j;
            j = t;
        }
        if (i == 0) return j == 0 ? m11 : (j == 1 ? m12 : m13);
        if (i == 1) return j == 1 ? m22 : m23;
        return m33;
    }

    constexpr Vec3 apply(const Vec3& v) const {
        return {m11 * v.x + m12 * v.y + m13 * v.z,
                m12 * v.x + m22 * v.y + m23 * v.z,
                m13 * v.x + m23 * v.y + m33 * v.z};
    }

    constexpr double trace() const { return m11 + m22 + m33; }

    constexpr double determinant() const {
        return m11 * (m22 * m33 - m23 * m23) - m12 * (m12 * m33 - m23 * m13) +
               m13 * (m12 * m23 - m22 * m13);
    }

    static constexpr SymMat3 diagonal(double d1, double d2, double d3) {
        return {d1, 0.0, 0.0, d2, 0.0, d3};
    }
};

constexpr double quadratic_form_value(const SymMat3& m, const Vec3& a) {
    return m.m11 * a.x * a.x + m.m22 * a.y * a.y + m.m33 * a.z * a.z +
           2.0 * (m.m12 * a.x * a.y + m.m13 * a.x * a.z + m.m23 * a.y * a.z);
}

inline bool is_finite(const SymMat3& m) {
    return std::isfinite(m.m11) && std::isfinite(m.m12) && std::isfinite(m.m13) &&
           std::isfinite(m.m22) && std::isfinite(m.m23) && std::isfinite(m.m33);
}

}  // namespace fit3d
