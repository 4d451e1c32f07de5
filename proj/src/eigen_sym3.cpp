#include "fit3d/eigen_sym3.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fit3d {

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kOffDiagonalTol = 1e-14;  // relative to the full Frobenius norm

double off_diagonal_sq(const double a[3][3]) {
    return 2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]);
}

// One Jacobi rotation annihilating a[p][q], accumulated into the columns of v.
void rotate(double a[3][3], double v[3][3], int p, int q) {
    const double apq = a[p][q];
    if (apq == 0.0) return;

    const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e153) {
        t = 1.0 / (2.0 * theta);  // asymptotic form, theta^2 would overflow
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    a[p][p] -= t * apq;
    a[q][q] += t * apq;
    a[p][q] = a[q][p] = 0.0;

    const int r = 3 - p - q;  // the index not being rotated
    const double arp = a[r][p];
    const double arq = a[r][q];
    a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
    a[r][q] = a[q][r] = arq + s * (arp - tau * arq);

    for (int i = 0; i < 3; ++i) {
        const double vip = v[i][p];
        const double viq = v[i][q];
        v[i][p] = vip - s * (viq + tau * vip);
        v[i][q] = viq + s * (vip - tau * viq);
    }
}

Vec3 sign_normalized(const Vec3& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (std::abs(v[i]) > std::abs(v[k])) k = i;
    return v[k] < 0.0 ? -v : v;
}

}  // namespace

std::string_view to_string(SpectrumClass c) {
    switch (c) {
        case SpectrumClass::Unique: return "unique";
        case SpectrumClass::DiscDegenerate: return "disc_degenerate";
        case SpectrumClass::BallDegenerate: return "ball_degenerate";
    }
    return "unique";
}

EigenDecomposition eigen_sym3(const SymMat3& m) {
    if (!is_finite(m)) throw std::invalid_argument("non-finite matrix entry");

    double a[3][3] = {{m.m11, m.m12, m.m13}, {m.m12, m.m22, m.m23}, {m.m13, m.m23, m.m33}};
    double v[3][3] = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};

    const double frob_sq = a[0][0] * a[0][0] + a[1][1] * a[1][1] + a[2][2] * a[2][2] +
                           off_diagonal_sq(a);
    const double stop = kOffDiagonalTol * kOffDiagonalTol * frob_sq;

    int sweep = 0;
    while (off_diagonal_sq(a) > stop && sweep < kMaxSweeps) {
        rotate(a, v, 0, 1);
        rotate(a, v, 0, 2);
        rotate(a, v, 1, 2);
        ++sweep;
    }
    if (off_diagonal_sq(a) > stop) throw std::runtime_error("eigensolver failed to converge");

    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a[i][i] < a[j][j]; });

    EigenDecomposition out;
    for (int k = 0; k < 3; ++k) {
        const int j = order[k];
        out.values[k] = a[j][j];
        out.vectors[k] = sign_normalized({v[0][j], v[1][j], v[2][j]});
    }
    return out;
}

SpectrumClass classify_spectrum(const EigenDecomposition& e, double rel_tol) {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
    const double scale = std::max(e.values[2], 1e-300);
    if (e.values[2] - e.values[0] <= rel_tol * scale) return SpectrumClass::BallDegenerate;
    if (e.values[1] - e.values[0] <= rel_tol * scale) return SpectrumClass::DiscDegenerate;
    return SpectrumClass::Unique;
}

}  // namespace fit3d
