#include "maglab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace maglab {

SquareMatrix SquareMatrix::identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double SquareMatrix::max_abs_entry() const noexcept {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::fabs(v));
    return m;
}

double SquareMatrix::max_diagonal() const noexcept {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i) m = std::max(m, (*this)(i, i));
    return m;
}

bool SquareMatrix::symmetric_within(double rel_tol) const noexcept {
    const double tol = rel_tol * std::max(1.0, max_abs_entry());
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (!(std::fabs((*this)(i, j) - (*this)(j, i)) <= tol)) return false;
        }
    }
    return true;
}

namespace {

void require_symmetric(const SquareMatrix& a) {
    if (!a.symmetric_within(kSymmetryTol)) {
        throw Error(Errc::asymmetric_input,
                    "matrix is not symmetric within tolerance");
    }
}

struct CholeskyResult {
    PdCertificate certificate;
    // Lower-triangular factor, row-major; valid only when certificate.is_pd.
    std::vector<double> lower;
};

// Unpivoted Cholesky on the lower triangle. A pivot is the diagonal value
// remaining after subtracting the accumulated row products, before its
// square root is taken.
CholeskyResult cholesky(const SquareMatrix& a) {
    const std::size_t n = a.size();
    CholeskyResult res;
    res.lower.assign(n * n, 0.0);

    const double pivot_floor =
        kPdPivotTol * std::max(1.0, n == 0 ? 1.0 : a.max_diagonal());

    double min_pivot = std::numeric_limits<double>::infinity();
    auto l = [&res, n](std::size_t i, std::size_t j) -> double& {
        return res.lower[i * n + j];
    };

    for (std::size_t k = 0; k < n; ++k) {
        double pivot = a(k, k);
        for (std::size_t j = 0; j < k; ++j) pivot -= l(k, j) * l(k, j);
        min_pivot = std::min(min_pivot, pivot);
        if (!(pivot > pivot_floor)) {
            res.certificate = {false, pivot};
            return res;
        }
        const double root = std::sqrt(pivot);
        l(k, k) = root;
        for (std::size_t i = k + 1; i < n; ++i) {
            double s = a(i, k);
            for (std::size_t j = 0; j < k; ++j) s -= l(i, j) * l(k, j);
            l(i, k) = s / root;
        }
    }
    res.certificate = {true, min_pivot};
    return res;
}

double solve_residual(const SquareMatrix& a, const std::vector<double>& w) {
    const std::size_t n = a.size();
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = -1.0;
        for (std::size_t j = 0; j < n; ++j) s += a(i, j) * w[j];
        r = std::max(r, std::fabs(s));
    }
    return r;
}

// Determinant by cofactor expansion along the first row. rows/cols select
// the active submatrix so no copies are made during recursion.
double cofactor_det(const SquareMatrix& a, std::vector<std::size_t>& rows,
                    std::vector<std::size_t>& cols) {
    const std::size_t m = rows.size();
    if (m == 0) return 1.0;
    if (m == 1) return a(rows[0], cols[0]);

    const std::size_t top = rows[0];
    rows.erase(rows.begin());
    double det = 0.0;
    double sign = 1.0;
    for (std::size_t c = 0; c < m; ++c) {
        const std::size_t col = cols[c];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
        det += sign * a(top, col) * cofactor_det(a, rows, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
        sign = -sign;
    }
    rows.insert(rows.begin(), top);
    return det;
}

double minor_det(const SquareMatrix& a, std::size_t drop_row,
                 std::size_t drop_col) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i != drop_row) rows.push_back(i);
        if (i != drop_col) cols.push_back(i);
    }
    return cofactor_det(a, rows, cols);
}

}  // namespace

PdCertificate check_positive_definite(const SquareMatrix& a) {
    require_symmetric(a);
    return cholesky(a).certificate;
}

Weighting solve_weighting(const SquareMatrix& a) {
    require_symmetric(a);
    const auto chol = cholesky(a);
    if (!chol.certificate.is_pd) {
        throw NotPositiveDefiniteError(
            chol.certificate,
            "Cholesky pivot " + std::to_string(chol.certificate.min_pivot) +
                " at or below tolerance");
    }

    const std::size_t n = a.size();
    const auto& l = chol.lower;

    // L y = 1, then L^T w = y.
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 1.0;
        for (std::size_t j = 0; j < i; ++j) s -= l[i * n + j] * w[j];
        w[i] = s / l[i * n + i];
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = w[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= l[j * n + i] * w[j];
        w[i] = s / l[i * n + i];
    }

    Weighting out{std::move(w), 0.0};
    out.residual = solve_residual(a, out.components);
    if (!(out.residual <= kWeightingResidualTol)) {
        throw Error(Errc::ill_conditioned,
                    "weighting residual " + std::to_string(out.residual) +
                        " exceeds tolerance");
    }
    return out;
}

double matrix_magnitude(const SquareMatrix& a) {
    const Weighting w = solve_weighting(a);
    double sum = 0.0;
    for (double v : w.components) sum += v;
    return sum;
}

double magnitude_via_adjugate(const SquareMatrix& a) {
    const std::size_t n = a.size();
    if (n > kAdjugateMaxDim) {
        throw Error(Errc::dimension_too_large,
                    "cofactor oracle accepts n <= " +
                        std::to_string(kAdjugateMaxDim));
    }

    std::vector<std::size_t> rows(n), cols(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
    const double det = cofactor_det(a, rows, cols);

    double scale = 1.0;
    const double max_abs = a.max_abs_entry();
    for (std::size_t i = 0; i < n; ++i) scale *= std::max(1.0, max_abs);
    if (std::fabs(det) <= kDeterminantTol * scale) {
        throw Error(Errc::singular_matrix,
                    "determinant " + std::to_string(det) +
                        " vanishes within tolerance");
    }

    // sum(adj(A)) = sum over all (i, j) of the (j, i) cofactor; the indices
    // can be swapped freely because the full double sum is taken.
    double adj_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            adj_sum += sign * minor_det(a, i, j);
        }
    }
    return adj_sum / det;
}

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::asymmetric_input: return "AsymmetricInput";
        case Errc::not_positive_definite: return "NotPositiveDefinite";
        case Errc::ill_conditioned: return "IllConditioned";
        case Errc::singular_matrix: return "SingularMatrix";
        case Errc::dimension_too_large: return "DimensionTooLarge";
        case Errc::not_a_metric: return "NotAMetric";
        case Errc::duplicate_points: return "DuplicatePoints";
        case Errc::negative_scale: return "NegativeScale";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::duplicate_index: return "DuplicateIndex";
        case Errc::empty_set: return "EmptySet";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::inverted_interval: return "InvertedInterval";
        case Errc::negative_radius: return "NegativeRadius";
        case Errc::nonpositive_input: return "NonpositiveInput";
        case Errc::nonpositive_mesh: return "NonpositiveMesh";
        case Errc::net_too_large: return "NetTooLarge";
        case Errc::monotonicity_violation: return "MonotonicityViolation";
        case Errc::solver_failure: return "SolverFailure";
        case Errc::degenerate_interval: return "DegenerateInterval";
        case Errc::config_error: return "ConfigError";
        case Errc::input_parse_error: return "InputParseError";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace maglab
