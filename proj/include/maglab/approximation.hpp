#ifndef MAGLAB_APPROXIMATION_HPP
#define MAGLAB_APPROXIMATION_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "maglab/metric_space.hpp"
#include "maglab/real_line.hpp"

namespace maglab {

/// Default stopping tolerance on successive magnitude increments.
inline constexpr double kDefaultStopTol = 1e-6;
/// Hard cap on net sizes; refinement past it reports converged = false.
inline constexpr std::size_t kDefaultMaxNetPoints = 4096;
/// Slack allowed before a decreasing magnitude sequence counts as a
/// monotonicity violation.
inline constexpr double kMonotonicityTol = 1e-10;

/// Finite net inside an interval union: each interval [a, b] carries the
/// evenly spaced points a + k (b - a)/m, m = ceil((b - a)/mesh), so the net
/// contains all endpoints, is a subset of the union, and is Hausdorff-within
/// mesh/2 of it. Throws Errc::nonpositive_mesh / Errc::empty_set.
RealFiniteSet uniform_net(const IntervalUnion& u, double mesh);

/// Axis-aligned box, one side per dimension.
struct Box {
    std::vector<Interval> sides;
};

/// Axis-uniform grid over the box, corners included; every box point lies
/// within dim^{1/p} * mesh/2 of the net. Throws Errc::nonpositive_mesh,
/// Errc::degenerate_interval, or Errc::net_too_large past max_points.
PointCloud grid_net_lp(const Box& box, double mesh, double p,
                       std::size_t max_points = kDefaultMaxNetPoints);

/// Magnitudes of a nested net family along a refinement schedule, with
/// stopping diagnostics.
struct ConvergenceReport {
    std::vector<double> mesh_sequence;
    std::vector<std::size_t> net_sizes;
    std::vector<double> magnitudes;
    double estimate = 0.0;
    double last_increment = 0.0;
    bool converged = false;
};

/// Evaluates the net magnitude along a strictly decreasing mesh schedule
/// (nets must be nested, e.g. by mesh halving), stopping once the increment
/// drops to stop_tol or the next net would exceed max_points. Because nested
/// nets force a nondecreasing sequence, any decrease beyond slack raises
/// Errc::monotonicity_violation; solver errors surface as
/// Errc::solver_failure.
ConvergenceReport estimate_compact_magnitude(
    const std::function<FiniteMetricSpace(double)>& net_at,
    std::span<const double> mesh_schedule, double stop_tol = kDefaultStopTol,
    std::size_t max_points = kDefaultMaxNetPoints);

struct OnePointCurve {
    std::vector<MagnitudeFunctionSample> samples;
    double final_deviation = 0.0;  // |value at the last (smallest) t - 1|
};

/// mg(tM) along a decreasing positive schedule, probing the t -> 0 limit.
/// Unlike magnitude_function_samples, a failed solve here aborts with
/// Errc::solver_failure.
OnePointCurve one_point_curve(const FiniteMetricSpace& m,
                              std::span<const double> decreasing_ts);

/// The l1 point set {0} u {(t/2^n) e_n : 1 <= n <= n_terms} in R^{n_terms}.
/// Its magnitude is bounded by e^{t/2} for every truncation depth.
/// n_terms <= 64.
FiniteMetricSpace kt_truncation(double t, std::size_t n_terms);

/// One uniform-continuity or Lipschitz counterexample instance.
struct CounterexampleReport {
    std::string family;      // "halfline" or "naturals"
    double epsilon = 0.0;    // halfline threshold
    double delta = 0.0;      // halfline Hausdorff separation
    double lipschitz_c = 0.0;  // naturals coefficient to defeat
    std::size_t n = 0;       // points in the sparse set construction
    std::string set_a;
    std::string set_b;
    double hausdorff = 0.0;
    double magnitude_gap = 0.0;
    bool violates = false;
};

/// On the half-line, A = {(2k+1) d : k < n} against B = [0, 2nd] with
/// n = max(2, ceil(eps / (d - tanh d))) yields Hausdorff distance d but
/// magnitude gap n (d - tanh d) + tanh d > eps, defeating uniform
/// continuity at threshold eps.
CounterexampleReport halfline_counterexample(double eps, double delta);

/// On the naturals, A = {0, 2, ..., 2N} against B = {0, 1, ..., 2N} with
/// N = 1 + floor(C / (2 tanh(1/2) - tanh 1)) has Hausdorff distance 1 but
/// magnitude gap N (2 tanh(1/2) - tanh 1) > C, defeating any Lipschitz
/// coefficient C.
CounterexampleReport naturals_counterexample(double c);

}  // namespace maglab

#endif  // MAGLAB_APPROXIMATION_HPP
