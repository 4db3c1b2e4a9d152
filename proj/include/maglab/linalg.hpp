#ifndef MAGLAB_LINALG_HPP
#define MAGLAB_LINALG_HPP

#include <cstddef>
#include <vector>

#include "maglab/errors.hpp"

namespace maglab {

/// Dense real square matrix, row-major. n = 0 is allowed (the empty matrix).
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, double fill = 0.0)
        : n_(n), entries_(n * n, fill) {}

    static SquareMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    const std::vector<double>& entries() const noexcept { return entries_; }

    double max_abs_entry() const noexcept;
    double max_diagonal() const noexcept;

    /// Symmetric within |a_ij - a_ji| <= tol * max(1, max|entry|).
    bool symmetric_within(double rel_tol) const noexcept;

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
};

/// Vector w with A w = 1_n, plus the max-norm residual of that system as solved.
struct Weighting {
    std::vector<double> components;
    double residual = 0.0;
};

/// Outcome of the pivot-based positive definiteness test. min_pivot is the
/// smallest pivot encountered, or the first nonpositive pivot when is_pd is
/// false.
struct PdCertificate {
    bool is_pd = false;
    double min_pivot = 0.0;
};

/// Relative pivot tolerance for the positive definiteness test.
inline constexpr double kPdPivotTol = 1e-12;
/// Relative entry tolerance when checking symmetry of inputs.
inline constexpr double kSymmetryTol = 1e-12;
/// Max-norm residual allowed on a returned Weighting.
inline constexpr double kWeightingResidualTol = 1e-8;
/// Largest dimension accepted by the cofactor-expansion oracle.
inline constexpr std::size_t kAdjugateMaxDim = 8;
/// Relative determinant tolerance below which the oracle reports singularity.
inline constexpr double kDeterminantTol = 1e-12;

/// Carries the failing certificate alongside the error.
class NotPositiveDefiniteError : public Error {
public:
    NotPositiveDefiniteError(PdCertificate cert, const std::string& message)
        : Error(Errc::not_positive_definite, message), certificate(cert) {}

    PdCertificate certificate;
};

/// Attempts an unpivoted Cholesky factorization of a symmetric matrix and
/// reports whether every pivot cleared kPdPivotTol * max(1, max diagonal).
/// The empty matrix is positive definite. Throws Errc::asymmetric_input if
/// the symmetry tolerance is violated.
PdCertificate check_positive_definite(const SquareMatrix& a);

/// Solves A w = 1_n through the Cholesky factors. Throws
/// NotPositiveDefiniteError when the factorization fails and
/// Errc::ill_conditioned when the solved residual exceeds
/// kWeightingResidualTol.
Weighting solve_weighting(const SquareMatrix& a);

/// Sum of the weighting components; 0 for the empty matrix.
double matrix_magnitude(const SquareMatrix& a);

/// Independent oracle: sum(adj(A)) / det(A) with both computed by exact
/// cofactor expansion. Restricted to n <= kAdjugateMaxDim since the cost
/// grows factorially. Throws Errc::singular_matrix or
/// Errc::dimension_too_large.
double magnitude_via_adjugate(const SquareMatrix& a);

}  // namespace maglab

#endif  // MAGLAB_LINALG_HPP
