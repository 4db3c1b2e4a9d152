#ifndef MAGLAB_REAL_LINE_HPP
#define MAGLAB_REAL_LINE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "maglab/errors.hpp"

namespace maglab {

/// Closed interval [lo, hi]; lo = hi is a point.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

class RealFiniteSet;

/// A compact subset of R stored as sorted, strictly separated closed
/// intervals (hi_i < lo_{i+1}). The empty union exists but only through
/// empty(); magnitude-bearing operations reject it.
class IntervalUnion {
public:
    static IntervalUnion empty() { return IntervalUnion(); }

    /// Sorts by left endpoint and merges overlapping or touching intervals.
    /// Merging at a touch point preserves magnitude since tanh(0) = 0.
    /// Throws Errc::inverted_interval when some pair has hi < lo.
    static IntervalUnion normalized(std::vector<Interval> raw);

    /// Degenerate union carrying the set's points.
    static IntervalUnion from_point_set(const RealFiniteSet& points);

    const std::vector<Interval>& intervals() const noexcept { return intervals_; }
    bool is_empty() const noexcept { return intervals_.empty(); }
    double min() const;
    double max() const;

private:
    std::vector<Interval> intervals_;
};

/// Strictly increasing finite list of reals.
class RealFiniteSet {
public:
    /// Sorts the values; exact duplicates raise Errc::duplicate_points.
    static RealFiniteSet from_values(std::vector<double> values);

    const std::vector<double>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    double min() const;
    double max() const;

private:
    std::vector<double> points_;
};

/// mg({a_1 < ... < a_n}) = 1 + sum of tanh((a_{i+1} - a_i) / 2), evaluated
/// left to right. Throws Errc::empty_set.
double real_finite_magnitude(const RealFiniteSet& a);

/// mg of a finite union of closed intervals:
/// 1 + sum (hi_i - lo_i)/2 + sum tanh((lo_{i+1} - hi_i)/2).
/// Degenerate intervals contribute zero length, recovering the finite-set
/// formula. Throws Errc::empty_set.
double interval_union_magnitude(const IntervalUnion& u);

IntervalUnion normalize_intervals(std::vector<Interval> raw);

/// Closed r-thickening {x : d(x, U) <= r}: widen every interval by r and
/// re-normalize. Throws Errc::negative_radius / Errc::empty_set.
IntervalUnion thicken(const IntervalUnion& u, double r);

/// Distance from x to the union (0 inside an interval).
double distance_to(const IntervalUnion& u, double x);

/// Exact Hausdorff distance between nonempty interval unions. The directed
/// distance sup_{x in U} d(x, V) is piecewise linear in x, so it is attained
/// on a finite candidate set: U's endpoints plus V's gap midpoints and
/// endpoints that fall inside U.
double hausdorff_real(const IntervalUnion& u, const IntervalUnion& v);

/// Lipschitz coefficient 1 + (b - a)/2 of magnitude on subsets of [a, b].
/// Throws Errc::degenerate_interval unless a < b.
double lipschitz_coefficient(double a, double b);

struct GrowthBound {
    double actual = 0.0;  // mg(thicken(A, r)) - mg(A)
    double bound = 0.0;   // r * (1 + (max A - min A)/2)
};

/// The increase in magnitude caused by r-thickening a finite set, next to
/// its linear bound. The contract actual <= bound + 1e-10 is checked by the
/// test suites, not here.
GrowthBound thickening_growth_bound(const RealFiniteSet& a, double r);

struct TanhGap {
    double lhs = 0.0;  // tanh(x)/x
    double rhs = 0.0;  // 1 - tanh^2(x)
};

/// Both sides of the inequality tanh(x)/x >= 1 - tanh^2(x), x > 0.
/// Throws Errc::nonpositive_input.
TanhGap tanh_gap_check(double x);

}  // namespace maglab

#endif  // MAGLAB_REAL_LINE_HPP
