#include "maglab/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace maglab {

namespace {

std::string describe_points(const std::vector<double>& pts, std::size_t limit = 8) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i >= limit) {
            os << ", ... (" << pts.size() << " points)";
            break;
        }
        if (i) os << ", ";
        os << pts[i];
    }
    os << "}";
    return os.str();
}

}  // namespace

RealFiniteSet uniform_net(const IntervalUnion& u, double mesh) {
    if (!(mesh > 0.0)) {
        throw Error(Errc::nonpositive_mesh, "mesh must be > 0");
    }
    if (u.is_empty()) {
        throw Error(Errc::empty_set, "cannot net the empty union");
    }

    std::vector<double> pts;
    for (const Interval& iv : u.intervals()) {
        const double len = iv.hi - iv.lo;
        if (len == 0.0) {
            pts.push_back(iv.lo);
            continue;
        }
        const double subdivisions = std::ceil(len / mesh);
        if (!(subdivisions < 1e9)) {
            throw Error(Errc::net_too_large, "mesh is too fine for this interval");
        }
        const auto m = static_cast<std::size_t>(subdivisions);
        for (std::size_t k = 0; k < m; ++k) {
            pts.push_back(iv.lo + len * (static_cast<double>(k) / static_cast<double>(m)));
        }
        pts.push_back(iv.hi);
    }
    return RealFiniteSet::from_values(std::move(pts));
}

PointCloud grid_net_lp(const Box& box, double mesh, double p,
                       std::size_t max_points) {
    if (!(mesh > 0.0)) {
        throw Error(Errc::nonpositive_mesh, "mesh must be > 0");
    }
    if (box.sides.empty()) {
        throw Error(Errc::degenerate_interval, "box needs at least one side");
    }

    std::vector<std::size_t> steps;
    double total_real = 1.0;
    for (const Interval& side : box.sides) {
        if (!(side.lo < side.hi)) {
            throw Error(Errc::degenerate_interval, "box side has no extent");
        }
        const double m_real = std::ceil((side.hi - side.lo) / mesh);
        total_real *= m_real + 1.0;
        if (!(total_real <= static_cast<double>(max_points))) {
            throw Error(Errc::net_too_large,
                        "grid would exceed the cap of " +
                            std::to_string(max_points) + " points");
        }
        steps.push_back(static_cast<std::size_t>(m_real));
    }
    const auto total = static_cast<std::size_t>(total_real);

    const std::size_t dim = box.sides.size();
    PointCloud cloud;
    cloud.dim = dim;
    cloud.p = p;
    cloud.points.reserve(total);

    std::vector<std::size_t> idx(dim, 0);
    for (std::size_t count = 0; count < total; ++count) {
        std::vector<double> pt(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            const Interval& side = box.sides[d];
            pt[d] = side.lo + (side.hi - side.lo) *
                                  (static_cast<double>(idx[d]) /
                                   static_cast<double>(steps[d]));
        }
        cloud.points.push_back(std::move(pt));
        for (std::size_t d = dim; d-- > 0;) {
            if (++idx[d] <= steps[d]) break;
            idx[d] = 0;
        }
    }
    return cloud;
}

ConvergenceReport estimate_compact_magnitude(
    const std::function<FiniteMetricSpace(double)>& net_at,
    std::span<const double> mesh_schedule, double stop_tol,
    std::size_t max_points) {
    if (mesh_schedule.size() < 2) {
        throw Error(Errc::invalid_argument, "schedule needs at least 2 meshes");
    }
    for (std::size_t i = 1; i < mesh_schedule.size(); ++i) {
        if (!(mesh_schedule[i] < mesh_schedule[i - 1])) {
            throw Error(Errc::invalid_argument,
                        "mesh schedule must be strictly decreasing");
        }
    }

    ConvergenceReport report;
    bool capped = false;
    bool refined = false;
    bool settled = false;
    for (double mesh : mesh_schedule) {
        FiniteMetricSpace net;
        try {
            net = net_at(mesh);
        } catch (const Error& e) {
            // A generator enforcing its own point cap stops the refinement
            // the same way an oversized net does.
            if (e.code() == Errc::net_too_large && !report.magnitudes.empty()) {
                capped = true;
                break;
            }
            throw;
        }
        if (net.size() > max_points) {
            capped = true;
            break;
        }
        double value = 0.0;
        try {
            value = magnitude(net);
        } catch (const Error& e) {
            throw Error(Errc::solver_failure,
                        "net at mesh " + std::to_string(mesh) + " failed: " +
                            e.what());
        }
        bool grew = false;
        if (!report.magnitudes.empty()) {
            const double prev = report.magnitudes.back();
            if (value < prev - kMonotonicityTol) {
                throw Error(Errc::monotonicity_violation,
                            "magnitude fell from " + std::to_string(prev) +
                                " to " + std::to_string(value) +
                                " under refinement");
            }
            report.last_increment = value - prev;
            grew = net.size() > report.net_sizes.back();
        }
        report.mesh_sequence.push_back(mesh);
        report.net_sizes.push_back(net.size());
        report.magnitudes.push_back(value);
        // A finer mesh that did not add points reproduces the same nested
        // net, so its zero increment says nothing about convergence; only
        // increments across genuine refinements can stop the schedule.
        if (grew) {
            refined = true;
            if (report.last_increment <= stop_tol) {
                settled = true;
                break;
            }
        }
    }

    if (report.magnitudes.empty()) {
        throw Error(Errc::net_too_large,
                    "every net in the schedule exceeds the point cap");
    }
    report.estimate = report.magnitudes.back();
    if (capped) {
        report.converged = false;
    } else if (refined) {
        report.converged = settled;
    } else {
        // The net never grew across the whole schedule: it already carries
        // every point the union has (all components degenerate), so the
        // constant value is the magnitude itself.
        report.converged = report.magnitudes.size() >= 2;
    }
    return report;
}

OnePointCurve one_point_curve(const FiniteMetricSpace& m,
                              std::span<const double> decreasing_ts) {
    if (m.empty()) {
        throw Error(Errc::empty_set, "one-point curve needs a nonempty space");
    }
    if (decreasing_ts.empty()) {
        throw Error(Errc::invalid_argument, "schedule is empty");
    }
    for (std::size_t i = 0; i < decreasing_ts.size(); ++i) {
        if (!(decreasing_ts[i] > 0.0)) {
            throw Error(Errc::invalid_argument, "schedule must stay positive");
        }
        if (i > 0 && !(decreasing_ts[i] < decreasing_ts[i - 1])) {
            throw Error(Errc::invalid_argument, "schedule must decrease");
        }
    }

    OnePointCurve curve;
    for (double t : decreasing_ts) {
        MagnitudeFunctionSample s;
        s.t = t;
        try {
            s.value = magnitude(scale(m, t));
        } catch (const Error& e) {
            throw Error(Errc::solver_failure,
                        "solve failed at t = " + std::to_string(t) + ": " +
                            e.what());
        }
        curve.samples.push_back(std::move(s));
    }
    curve.final_deviation = std::fabs(curve.samples.back().value - 1.0);
    return curve;
}

FiniteMetricSpace kt_truncation(double t, std::size_t n_terms) {
    if (!(t > 0.0)) {
        throw Error(Errc::nonpositive_input, "scale t must be > 0");
    }
    if (n_terms < 1 || n_terms > 64) {
        throw Error(Errc::invalid_argument, "truncation depth must be in [1, 64]");
    }

    PointCloud cloud;
    cloud.dim = n_terms;
    cloud.p = 1.0;
    cloud.points.assign(n_terms + 1, std::vector<double>(n_terms, 0.0));
    for (std::size_t n = 1; n <= n_terms; ++n) {
        cloud.points[n][n - 1] = t / std::ldexp(1.0, static_cast<int>(n));
    }
    return from_points(cloud);
}

CounterexampleReport halfline_counterexample(double eps, double delta) {
    if (!(eps > 0.0) || !(delta > 0.0)) {
        throw Error(Errc::nonpositive_input, "eps and delta must be > 0");
    }

    const double slack = delta - std::tanh(delta);
    const double n_real = std::ceil(eps / slack);
    if (!(n_real < 1e7)) {
        throw Error(Errc::invalid_argument,
                    "construction needs too many points at these parameters");
    }
    const auto n = std::max<std::size_t>(2, static_cast<std::size_t>(n_real));

    std::vector<double> odd_multiples(n);
    for (std::size_t k = 0; k < n; ++k) {
        odd_multiples[k] = static_cast<double>(2 * k + 1) * delta;
    }
    const RealFiniteSet sparse = RealFiniteSet::from_values(odd_multiples);
    const IntervalUnion sparse_union = IntervalUnion::from_point_set(sparse);
    const IntervalUnion segment =
        IntervalUnion::normalized({{0.0, 2.0 * static_cast<double>(n) * delta}});

    CounterexampleReport report;
    report.family = "halfline";
    report.epsilon = eps;
    report.delta = delta;
    report.n = n;
    report.set_a = describe_points(sparse.points());
    report.set_b = "[0, " + std::to_string(segment.max()) + "]";
    report.hausdorff = hausdorff_real(sparse_union, segment);
    report.magnitude_gap =
        interval_union_magnitude(segment) - real_finite_magnitude(sparse);
    report.violates = report.magnitude_gap > eps;
    return report;
}

CounterexampleReport naturals_counterexample(double c) {
    if (!(c > 0.0)) {
        throw Error(Errc::nonpositive_input, "coefficient must be > 0");
    }

    const double step = 2.0 * std::tanh(0.5) - std::tanh(1.0);
    const double n_real = 1.0 + std::floor(c / step);
    if (!(n_real < 1e7)) {
        throw Error(Errc::invalid_argument,
                    "construction needs too many points at this coefficient");
    }
    const auto big_n = static_cast<std::size_t>(n_real);

    std::vector<double> evens(big_n + 1), all(2 * big_n + 1);
    for (std::size_t k = 0; k <= big_n; ++k) evens[k] = static_cast<double>(2 * k);
    for (std::size_t k = 0; k <= 2 * big_n; ++k) all[k] = static_cast<double>(k);
    const RealFiniteSet even_set = RealFiniteSet::from_values(evens);
    const RealFiniteSet full_set = RealFiniteSet::from_values(all);

    CounterexampleReport report;
    report.family = "naturals";
    report.lipschitz_c = c;
    report.n = big_n;
    report.set_a = describe_points(even_set.points());
    report.set_b = describe_points(full_set.points());
    report.hausdorff = hausdorff_real(IntervalUnion::from_point_set(even_set),
                                      IntervalUnion::from_point_set(full_set));
    report.magnitude_gap =
        real_finite_magnitude(full_set) - real_finite_magnitude(even_set);
    report.violates = report.magnitude_gap > c * report.hausdorff;
    return report;
}

}  // namespace maglab
