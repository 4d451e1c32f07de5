#pragma once

#include <cstddef>
#include <vector>

#include "fit3d/vec3.hpp"

namespace fit3d {

/// An ordered group of points. Order is preserved so per-point results
/// (residuals, plots) can be matched back to the input.
struct PointCloud {
    std::vector<Vec3> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

}  // namespace fit3d
