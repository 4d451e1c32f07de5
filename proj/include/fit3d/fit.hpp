#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fit3d/eigen_sym3.hpp"
#include "fit3d/point_cloud.hpp"
#include "fit3d/vec3.hpp"

namespace fit3d {

struct FitConfig {
    /// Relative eigenvalue-gap tolerance used to flag degenerate spectra.
    double degeneracy_rel_tol = 1e-6;
    /// When set, a non-unique optimal direction raises DegenerateError
    /// instead of being reported through the classification field.
    bool strict_degenerate = false;
};

/// Result of the orthogonal-distance line fit. The fitted line passes through
/// `centroid` with unit `direction`; `moment` = cross(centroid, direction) is its
/// point-free form. `eigenvalues` is the ascending spectrum of the second-moment
/// form, `mean_square_distance` the attained minimum of the objective (equal to
/// eigenvalues[0] up to roundoff), and `classification` whether that minimum is
/// attained by one direction, a plane of directions, or all of them.
struct FitResult {
    Vec3 centroid;
    Vec3 direction;
    Vec3 moment;
    std::array<double, 3> eigenvalues{};
    double mean_square_distance = 0.0;
    double rms_distance = 0.0;
    SpectrumClass classification = SpectrumClass::Unique;
    std::size_t n_points = 0;
};

class DegenerateError : public std::runtime_error {
public:
    DegenerateError(SpectrumClass classification, const std::array<double, 3>& eigenvalues);

    SpectrumClass classification() const { return classification_; }
    const std::array<double, 3>& eigenvalues() const { return eigenvalues_; }

private:
    SpectrumClass classification_;
    std::array<double, 3> eigenvalues_;
};

/// Fits the line minimizing the mean of squared orthogonal distances:
/// through the centroid, directed along the eigenvector of the smallest
/// eigenvalue of the second-moment form. For degenerate spectra the returned
/// direction is still that eigenvector (deterministic via the eigensolver's
/// conventions); the classification flags that it is not unique.
FitResult fit_line(const PointCloud& cloud, const FitConfig& config = {});

/// Per-point distances to the fitted line, in input order.
std::vector<double> residual_report(const PointCloud& cloud, const FitResult& result);

}  // namespace fit3d
