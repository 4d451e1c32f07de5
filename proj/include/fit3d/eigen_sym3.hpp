#pragma once

#include <array>
#include <string_view>

#include "fit3d/sym_mat3.hpp"
#include "fit3d/vec3.hpp"

namespace fit3d {

/// Ascending eigenvalues with matching orthonormal eigenvectors:
/// values[k] pairs with vectors[k], and sum_k values[k] * v_k v_k^T
/// reconstructs the input matrix.
struct EigenDecomposition {
    std::array<double, 3> values{};
    std::array<Vec3, 3> vectors{};
};

/// Shape of the spectrum, decided against a relative tolerance:
///   Unique          l1 < l2        one optimal direction
///   DiscDegenerate  l1 = l2 < l3   any direction in the l1/l2 plane is optimal
///   BallDegenerate  l1 = l2 = l3   no direction is preferred at all
enum class SpectrumClass { Unique, DiscDegenerate, BallDegenerate };

std::string_view to_string(SpectrumClass c);

/// Eigendecomposition by cyclic Jacobi rotations over the pairs
/// (1,2), (1,3), (2,3). Converges when the off-diagonal Frobenius norm falls
/// below 1e-14 of the full Frobenius norm; capped at 50 sweeps.
///
/// Output is deterministic: eigenvalues ascend (ties keep rotation order via a
/// stable sort) and each eigenvector is flipped so its largest-magnitude
/// component is positive, ties broken by lowest coordinate index.
EigenDecomposition eigen_sym3(const SymMat3& m);

/// Classifies with scale = max(l3, 1e-300):
/// ball if l3 - l1 <= rel_tol * scale, else disc if l2 - l1 <= rel_tol * scale,
/// else unique. The zero matrix classifies as ball.
SpectrumClass classify_spectrum(const EigenDecomposition& e, double rel_tol);

}  // namespace fit3d
