#ifndef MAGLAB_METRIC_SPACE_HPP
#define MAGLAB_METRIC_SPACE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "maglab/linalg.hpp"

namespace maglab {

/// Relative tolerance on d(i,j) = d(j,i).
inline constexpr double kMetricSymmetryTol = 1e-12;
/// Relative slack allowed on the triangle inequality.
inline constexpr double kTriangleTol = 1e-9;
/// Distances above this underflow e^{-d} to zero in double precision; the
/// similarity matrix clamps them to exactly 0.
inline constexpr double kSimilarityUnderflowDistance = 745.0;

/// Points in R^dim under the p-norm, 1 <= p <= infinity. Magnitude
/// computations are only meaningful for p in [1, 2], where the similarity
/// matrices are positive definite; distance queries work for any p.
struct PointCloud {
    std::size_t dim = 0;
    double p = 2.0;
    std::vector<std::vector<double>> points;

    std::size_t size() const noexcept { return points.size(); }
};

/// ||a - b||_p for p in [1, infinity].
double lp_distance(std::span<const double> a, std::span<const double> b, double p);

/// A validated finite metric space: n labeled points with their pairwise
/// distances. Construction goes through from_distance_matrix (full axiom
/// validation) or from_points (metric by construction). A space produced by
/// scale(M, 0) is flagged as a pseudometric collapse; it may only be fed to
/// magnitude(), which answers 1 directly for nonempty spaces.
class FiniteMetricSpace {
public:
    FiniteMetricSpace() = default;

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }
    double distance(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool zero_scaled() const noexcept { return zero_scaled_; }

    friend FiniteMetricSpace from_distance_matrix(const SquareMatrix& d,
                                                  std::vector<std::string> labels);
    friend FiniteMetricSpace from_points(const PointCloud& cloud);
    friend FiniteMetricSpace scale(const FiniteMetricSpace& m, double t);
    friend FiniteMetricSpace subspace(const FiniteMetricSpace& m,
                                      std::span<const std::size_t> indices);

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
    std::vector<std::string> labels_;
    bool zero_scaled_ = false;
};

/// Validates the metric axioms (zero diagonal, symmetry, positivity,
/// triangle inequality) and returns the space. Throws Errc::not_a_metric
/// naming the first violated axiom and the offending indices.
FiniteMetricSpace from_distance_matrix(const SquareMatrix& d,
                                       std::vector<std::string> labels = {});

/// Space induced by the cloud's p-metric. Throws Errc::duplicate_points when
/// two points coincide.
FiniteMetricSpace from_points(const PointCloud& cloud);

/// Z_ij = e^{-d(a_i, a_j)}, exactly symmetric by construction.
SquareMatrix similarity_matrix(const FiniteMetricSpace& m);

/// Multiplies all distances by t >= 0. t = 0 yields the flagged pseudometric
/// collapse. Throws Errc::negative_scale.
FiniteMetricSpace scale(const FiniteMetricSpace& m, double t);

/// Magnitude of the similarity matrix; 0 for the empty space, 1 for a
/// singleton and for any nonempty zero-scaled space.
double magnitude(const FiniteMetricSpace& m);

/// Restriction to the selected points.
FiniteMetricSpace subspace(const FiniteMetricSpace& m,
                           std::span<const std::size_t> indices);

struct MagnitudeFunctionSample {
    double t = 0.0;
    double value = 0.0;
    bool ok = true;
    std::string error;
};

/// Evaluates t -> mg(tM) over an ascending grid. Individual failures (the
/// magnitude function of a general finite space can be undefined at finitely
/// many scales) are recorded in-sample rather than aborting the sweep.
std::vector<MagnitudeFunctionSample> magnitude_function_samples(
    const FiniteMetricSpace& m, std::span<const double> ts);

/// Hausdorff distance between two nonempty finite point sets under their
/// common p-metric, by brute force over both directed distances.
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

}  // namespace maglab

#endif  // MAGLAB_METRIC_SPACE_HPP
