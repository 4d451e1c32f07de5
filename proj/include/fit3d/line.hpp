#pragma once

#include <cmath>
#include <stdexcept>

#include "fit3d/vec3.hpp"

namespace fit3d {

namespace detail {

inline Vec3 unit_direction_or_throw(const Vec3& d) {
    if (!is_finite(d)) throw std::invalid_argument("non-finite direction");
    const double len = norm(d);
    if (len == 0.0) throw std::invalid_argument("zero direction vector");
    return d / len;
}

}  // namespace detail

/// A line given by a fixed point and a unit direction: r(t) = point + direction * t.
/// The constructor normalizes the direction; a zero vector is rejected.
class LineParametric {
public:
    LineParametric(const Vec3& point, const Vec3& direction)
        : point_(point), direction_(detail::unit_direction_or_throw(direction)) {
        if (!is_finite(point_)) throw std::invalid_argument("non-finite line point");
    }

    const Vec3& point() const { return point_; }
    const Vec3& direction() const { return direction_; }

private:
    Vec3 point_;
    Vec3 direction_;
};

/// The point-free form of the same line: all points r with cross(r, direction) == moment.
/// The moment is invariant under sliding the reference point along the line, so two
/// (direction, moment) pairs describe the same line exactly when they are equal.
/// Invariant: moment is orthogonal to direction. Small violations (relative to
/// max(1, |moment|)) are projected out on construction; larger ones are rejected.
class LineMoment {
public:
    static constexpr double kOrthogonalityTol = 1e-8;

    LineMoment(const Vec3& direction, const Vec3& moment)
        : direction_(detail::unit_direction_or_throw(direction)), moment_(moment) {
        if (!is_finite(moment_)) throw std::invalid_argument("non-finite moment");
        const double along = dot(moment_, direction_);
        if (std::abs(along) > kOrthogonalityTol * std::max(1.0, norm(moment_)))
            throw std::invalid_argument("moment not orthogonal to direction");
        moment_ -= direction_ * along;
    }

    const Vec3& direction() const { return direction_; }
    const Vec3& moment() const { return moment_; }

private:
    Vec3 direction_;
    Vec3 moment_;
};

inline Vec3 evaluate(const LineParametric& line, double t) {
    return line.point() + line.direction() * t;
}

inline LineMoment to_moment_form(const LineParametric& line) {
    return {line.direction(), cross(line.point(), line.direction())};
}

inline double point_line_distance(const Vec3& p, const LineParametric& line) {
    return norm(cross(p - line.point(), line.direction()));
}

inline double moment_residual(const Vec3& p, const LineMoment& line) {
    return norm(cross(p, line.direction()) - line.moment());
}

inline Vec3 closest_point(const Vec3& p, const LineParametric& line) {
    return line.point() + line.direction() * dot(p - line.point(), line.direction());
}

}  // namespace fit3d
