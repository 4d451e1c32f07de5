#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"

#include "fit3d/eigen_sym3.hpp"
#include "support.hpp"

using namespace fit3d;
using namespace fit3d::testing;

namespace {

SymMat3 random_symmetric(Rng& rng) {
    SymMat3 m;
    m.m11 = uniform(rng, -1, 1);
    m.m12 = uniform(rng, -1, 1);
    m.m13 = uniform(rng, -1, 1);
    m.m22 = uniform(rng, -1, 1);
    m.m23 = uniform(rng, -1, 1);
    m.m33 = uniform(rng, -1, 1);
    return m;
}

// max |sum_k l_k v_k v_k^T - m| over the six unique entries
double reconstruction_error(const EigenDecomposition& e, const SymMat3& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
            double entry = 0.0;
            for (std::size_t k = 0; k < 3; ++k)
                entry += e.values[k] * e.vectors[k][i] * e.vectors[k][j];
            worst = std::max(worst, std::abs(entry - m(i, j)));
        }
    }
    return worst;
}

bool satisfies_invariants(const EigenDecomposition& e, const SymMat3& m) {
    const double scale = std::abs(e.values[2]) + 1.0;
    bool ok = e.values[0] <= e.values[1] && e.values[1] <= e.values[2];
    for (std::size_t k = 0; k < 3; ++k) {
        ok = ok && std::abs(norm(e.vectors[k]) - 1.0) <= 1e-10;
        ok = ok && norm(m.apply(e.vectors[k]) - e.vectors[k] * e.values[k]) <= 1e-10 * scale;
    }
    ok = ok && std::abs(dot(e.vectors[0], e.vectors[1])) <= 1e-10;
    ok = ok && std::abs(dot(e.vectors[0], e.vectors[2])) <= 1e-10;
    ok = ok && std::abs(dot(e.vectors[1], e.vectors[2])) <= 1e-10;
    ok = ok && reconstruction_error(e, m) <= 1e-10 * scale;
    const double tr = e.values[0] + e.values[1] + e.values[2];
    ok = ok && std::abs(tr - m.trace()) <= 1e-10 * (std::abs(m.trace()) + 1.0);
    const double det = e.values[0] * e.values[1] * e.values[2];
    const double l3 = std::abs(e.values[2]);
    ok = ok && std::abs(det - m.determinant()) <= 1e-9 * (l3 * l3 * l3 + 1.0);
    return ok;
}

int degeneracy_rank(SpectrumClass c) {
    switch (c) {
        case SpectrumClass::Unique: return 0;
        case SpectrumClass::DiscDegenerate: return 1;
        case SpectrumClass::BallDegenerate: return 2;
    }
    return 0;
}

}  // namespace

TEST_CASE("diagonal matrix is returned sorted with basis eigenvectors") {
    const EigenDecomposition e = eigen_sym3(SymMat3::diagonal(3, 1, 2));
    CHECK(e.values[0] == 1.0);
    CHECK(e.values[1] == 2.0);
    CHECK(e.values[2] == 3.0);
    CHECK(e.vectors[0] == Vec3{0, 1, 0});
    CHECK(e.vectors[1] == Vec3{0, 0, 1});
    CHECK(e.vectors[2] == Vec3{1, 0, 0});
}

TEST_CASE("multiple of the identity") {
    const EigenDecomposition e = eigen_sym3(SymMat3::diagonal(2, 2, 2));
    CHECK(e.values[0] == 2.0);
    CHECK(e.values[1] == 2.0);
    CHECK(e.values[2] == 2.0);
    CHECK(satisfies_invariants(e, SymMat3::diagonal(2, 2, 2)));
}

TEST_CASE("2x2 block eigenproblem") {
    SymMat3 m;
    m.m11 = 2;
    m.m22 = 2;
    m.m12 = 1;
    m.m33 = 5;
    const EigenDecomposition e = eigen_sym3(m);
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(e.values[2] == doctest::Approx(5.0).epsilon(1e-14));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(norm(e.vectors[0] - Vec3{inv_sqrt2, -inv_sqrt2, 0}) <= 1e-14);
    CHECK(satisfies_invariants(e, m));
}

TEST_CASE("zero matrix decomposes to the standard basis") {
    const EigenDecomposition e = eigen_sym3(SymMat3{});
    CHECK(e.values == std::array<double, 3>{0, 0, 0});
    CHECK(e.vectors[0] == Vec3{1, 0, 0});
    CHECK(classify_spectrum(e, 1e-6) == SpectrumClass::BallDegenerate);
}

TEST_CASE("non-finite input is rejected") {
    SymMat3 m;
    m.m12 = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(eigen_sym3(m), std::invalid_argument);
    m.m12 = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(eigen_sym3(m), std::invalid_argument);
}

TEST_CASE("decomposition is deterministic") {
    Rng rng(0x12341234ULL);
    const SymMat3 m = random_symmetric(rng);
    const EigenDecomposition a = eigen_sym3(m);
    const EigenDecomposition b = eigen_sym3(m);
    CHECK(a.values == b.values);
    for (std::size_t k = 0; k < 3; ++k) CHECK(a.vectors[k] == b.vectors[k]);
}

TEST_CASE("sign convention makes the largest component positive") {
    Rng rng(0x51517171ULL);
    for (int i = 0; i < 100; ++i) {
        const EigenDecomposition e = eigen_sym3(random_symmetric(rng));
        for (const Vec3& v : e.vectors) {
            std::size_t k = 0;
            for (std::size_t j = 1; j < 3; ++j)
                if (std::abs(v[j]) > std::abs(v[k])) k = j;
            CHECK(v[k] > 0.0);
        }
    }
}

TEST_CASE("invariants hold on random symmetric matrices") {
    Rng rng(0xee661234ULL);
    for (int i = 0; i < 2000; ++i) {
        const SymMat3 m = random_symmetric(rng);
        CHECK(satisfies_invariants(eigen_sym3(m), m));
    }
}

TEST_CASE("eigenvalues are similarity invariant") {
    Rng rng(0x0badc0deULL);
    for (int i = 0; i < 100; ++i) {
        const SymMat3 m = random_symmetric(rng);
        const Rot3 r = random_rotation(rng);
        const EigenDecomposition e0 = eigen_sym3(m);
        const EigenDecomposition e1 = eigen_sym3(conjugate(r, m));
        const double tol = 1e-9 * (std::abs(e0.values[2]) + 1.0);
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(std::abs(e0.values[k] - e1.values[k]) <= tol);
    }
}

TEST_CASE("spectrum classification at the default tolerance") {
    EigenDecomposition e;
    e.vectors = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

    e.values = {0, 2.0 / 3.0, 2.0 / 3.0};
    CHECK(classify_spectrum(e, 1e-6) == SpectrumClass::Unique);
    e.values = {1, 1, 2};
    CHECK(classify_spectrum(e, 1e-6) == SpectrumClass::DiscDegenerate);
    e.values = {2, 2, 2};
    CHECK(classify_spectrum(e, 1e-6) == SpectrumClass::BallDegenerate);

    CHECK_THROWS_AS(classify_spectrum(e, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(classify_spectrum(e, -1.0), std::invalid_argument);
}

TEST_CASE("classification is monotone in the tolerance") {
    Rng rng(0x31415926ULL);
    const std::array<double, 6> tols{1e-12, 1e-9, 1e-6, 1e-3, 1e-1, 10.0};
    for (int i = 0; i < 200; ++i) {
        EigenDecomposition e;
        e.vectors = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
        std::array<double, 3> v{uniform(rng, 0, 2), uniform(rng, 0, 2), uniform(rng, 0, 2)};
        std::sort(v.begin(), v.end());
        // sprinkle exact and near ties
        if (i % 3 == 0) v[1] = v[0];
        if (i % 5 == 0) v[2] = v[1] * (1.0 + 1e-8);
        e.values = v;

        int prev = 0;
        for (const double tol : tols) {
            const int rank = degeneracy_rank(classify_spectrum(e, tol));
            CHECK(rank >= prev);
            prev = rank;
        }
    }
}

TEST_CASE("classification string names") {
    CHECK(to_string(SpectrumClass::Unique) == "unique");
    CHECK(to_string(SpectrumClass::DiscDegenerate) == "disc_degenerate");
    CHECK(to_string(SpectrumClass::BallDegenerate) == "ball_degenerate");
}
