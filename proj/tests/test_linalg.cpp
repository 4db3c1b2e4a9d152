#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "maglab/linalg.hpp"
#include "maglab/metric_space.hpp"
#include "test_support.hpp"

using namespace maglab;

namespace {

SquareMatrix two_point_similarity(double u) {
    SquareMatrix z(2);
    z(0, 0) = z(1, 1) = 1.0;
    z(0, 1) = z(1, 0) = std::exp(-u);
    return z;
}

}  // namespace

TEST_CASE("empty matrix is positive definite with magnitude zero") {
    const SquareMatrix empty(0);
    CHECK(check_positive_definite(empty).is_pd);
    CHECK(matrix_magnitude(empty) == 0.0);
    CHECK(magnitude_via_adjugate(empty) == 0.0);
}

TEST_CASE("identity matrices") {
    const SquareMatrix id = SquareMatrix::identity(3);
    CHECK(check_positive_definite(id).is_pd);

    const Weighting w = solve_weighting(id);
    REQUIRE(w.components.size() == 3);
    for (double c : w.components) CHECK(c == 1.0);
    CHECK(w.residual == 0.0);
    CHECK(matrix_magnitude(id) == 3.0);
    CHECK(magnitude_via_adjugate(SquareMatrix::identity(2)) == 2.0);
}

TEST_CASE("singular all-ones matrix is rejected") {
    SquareMatrix ones(2, 1.0);
    const PdCertificate cert = check_positive_definite(ones);
    CHECK_FALSE(cert.is_pd);
    // Second pivot is 1 - 1*1 = 0.
    CHECK(cert.min_pivot == doctest::Approx(0.0).epsilon(1e-15));

    CHECK_THROWS_AS(solve_weighting(ones), NotPositiveDefiniteError);
    try {
        solve_weighting(ones);
    } catch (const NotPositiveDefiniteError& e) {
        CHECK_FALSE(e.certificate.is_pd);
    }
    CHECK_THROWS_AS(magnitude_via_adjugate(ones), Error);
    try {
        magnitude_via_adjugate(ones);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::singular_matrix);
    }
}

TEST_CASE("two-point similarity matrix solves by hand") {
    // Inverting [[1, z], [z, 1]] gives equal components 1/(1 + z).
    const SquareMatrix z = two_point_similarity(1.0);
    const Weighting w = solve_weighting(z);
    CHECK(w.components[0] == doctest::Approx(0.7310585786300049).epsilon(1e-14));
    CHECK(w.components[1] == doctest::Approx(0.7310585786300049).epsilon(1e-14));
    CHECK(matrix_magnitude(z) == doctest::Approx(1.4621171572600098).epsilon(1e-14));
    CHECK(magnitude_via_adjugate(z) ==
          doctest::Approx(1.4621171572600098).epsilon(1e-14));
    CHECK(std::fabs(matrix_magnitude(z) - magnitude_via_adjugate(z)) <= 1e-10);
}

TEST_CASE("asymmetric input is rejected") {
    SquareMatrix a(2);
    a(0, 0) = a(1, 1) = 1.0;
    a(0, 1) = 0.5;
    a(1, 0) = 0.4;
    CHECK_THROWS_AS(check_positive_definite(a), Error);
    try {
        matrix_magnitude(a);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::asymmetric_input);
    }
}

TEST_CASE("adjugate oracle rejects large dimensions") {
    try {
        magnitude_via_adjugate(SquareMatrix::identity(9));
        FAIL("expected DimensionTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::dimension_too_large);
    }
}

TEST_CASE("oracle equivalence on random positive definite similarity matrices") {
    testsupport::Rand rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const double p = rng.count(0, 1) == 0 ? 1.0 : 2.0;
        const PointCloud cloud = testsupport::random_cloud(rng, 3, 6, p, 1.5);
        const SquareMatrix z = similarity_matrix(from_points(cloud));

        const double via_cholesky = matrix_magnitude(z);
        const double via_adjugate = magnitude_via_adjugate(z);
        CHECK(std::fabs(via_cholesky - via_adjugate) <=
              1e-9 * std::max(1.0, std::fabs(via_cholesky)));
    }
}

TEST_CASE("magnitude is invariant under symmetric permutation") {
    testsupport::Rand rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const PointCloud cloud = testsupport::random_cloud(rng, 3, 8, 2.0, 2.0);
        const SquareMatrix z = similarity_matrix(from_points(cloud));
        const std::size_t n = z.size();

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i) {
            std::swap(perm[i - 1], perm[rng.count(0, i - 1)]);
        }
        SquareMatrix permuted(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                permuted(i, j) = z(perm[i], perm[j]);
            }
        }
        CHECK(matrix_magnitude(permuted) ==
              doctest::Approx(matrix_magnitude(z)).epsilon(1e-10));
    }
}

TEST_CASE("weightings satisfy the residual contract both ways") {
    testsupport::Rand rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const PointCloud cloud = testsupport::random_cloud(rng, 2, 10, 1.0, 3.0);
        const SquareMatrix z = similarity_matrix(from_points(cloud));
        const Weighting w = solve_weighting(z);
        CHECK(w.residual <= 1e-8);

        // For symmetric input the weighting doubles as the coweighting.
        double transpose_residual = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            double s = -1.0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                s += z(j, i) * w.components[j];
            }
            transpose_residual = std::max(transpose_residual, std::fabs(s));
        }
        CHECK(transpose_residual <= 1e-8);
    }
}
