#include "fit3d/fit.hpp"

#include <cmath>
#include <sstream>

#include "fit3d/nonlinearity.hpp"
#include "fit3d/sym_mat3.hpp"

namespace fit3d {

namespace {

std::string degenerate_message(SpectrumClass c, const std::array<double, 3>& ev) {
    std::ostringstream os;
    os << "degenerate configuration (" << to_string(c) << "): eigenvalues [" << ev[0] << ", "
       << ev[1] << ", " << ev[2] << "]";
    return os.str();
}

}  // namespace

DegenerateError::DegenerateError(SpectrumClass classification,
                                 const std::array<double, 3>& eigenvalues)
    : std::runtime_error(degenerate_message(classification, eigenvalues)),
      classification_(classification),
      eigenvalues_(eigenvalues) {}

FitResult fit_line(const PointCloud& cloud, const FitConfig& config) {
    if (!(config.degeneracy_rel_tol > 0.0))
        throw std::invalid_argument("degeneracy_rel_tol must be positive");
    if (cloud.empty()) throw std::invalid_argument("empty point cloud");
    for (const Vec3& p : cloud.points)
        if (!is_finite(p)) throw std::invalid_argument("non-finite point coordinate");

    const Vec3 center = centroid(cloud);
    const SymMat3 form = nonlinearity_matrix(cloud);
    const EigenDecomposition eig = eigen_sym3(form);
    const Vec3 direction = eig.vectors[0];

    // The attained minimum equals the smallest eigenvalue; evaluating it as the
    // residual sum over centered points keeps full accuracy when that eigenvalue
    // is at roundoff scale (exactly collinear input).
    double acc = 0.0;
    for (const Vec3& p : cloud.points) acc += norm_squared(cross(p - center, direction));
    const double msd = acc / static_cast<double>(cloud.size());

    const SpectrumClass cls = classify_spectrum(eig, config.degeneracy_rel_tol);
    if (config.strict_degenerate && cls != SpectrumClass::Unique)
        throw DegenerateError(cls, eig.values);

    FitResult result;
    result.centroid = center;
    result.direction = direction;
    result.moment = cross(center, direction);
    result.eigenvalues = eig.values;
    result.mean_square_distance = msd;
    result.rms_distance = std::sqrt(msd);
    result.classification = cls;
    result.n_points = cloud.size();
    return result;
}

std::vector<double> residual_report(const PointCloud& cloud, const FitResult& result) {
    if (cloud.size() != result.n_points)
        throw std::invalid_argument("fit result does not match this cloud: point count differs");
    std::vector<double> distances;
    distances.reserve(cloud.size());
    for (const Vec3& p : cloud.points)
        distances.push_back(norm(cross(p - result.centroid, result.direction)));
    return distances;
}

}  // namespace fit3d
