#include "maglab/real_line.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace maglab {

namespace {

void require_nonempty(const IntervalUnion& u, const char* op) {
    if (u.is_empty()) {
        throw Error(Errc::empty_set, std::string(op) + " needs a nonempty union");
    }
}

}  // namespace

IntervalUnion normalize_intervals(std::vector<Interval> raw) {
    for (const Interval& iv : raw) {
        if (!(iv.lo <= iv.hi)) {
            throw Error(Errc::inverted_interval,
                        "interval [" + std::to_string(iv.lo) + ", " +
                            std::to_string(iv.hi) + "] has hi < lo");
        }
    }
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });

    std::vector<Interval> merged;
    for (const Interval& iv : raw) {
        if (!merged.empty() && merged.back().hi >= iv.lo) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    return IntervalUnion::normalized(std::move(merged));
}

IntervalUnion IntervalUnion::normalized(std::vector<Interval> raw) {
    // Fast path: already sorted and strictly separated.
    bool canonical = true;
    for (std::size_t i = 0; i < raw.size() && canonical; ++i) {
        if (!(raw[i].lo <= raw[i].hi)) canonical = false;
        if (i > 0 && !(raw[i - 1].hi < raw[i].lo)) canonical = false;
    }
    if (canonical) {
        IntervalUnion u;
        u.intervals_ = std::move(raw);
        return u;
    }
    return normalize_intervals(std::move(raw));
}

IntervalUnion IntervalUnion::from_point_set(const RealFiniteSet& points) {
    std::vector<Interval> raw;
    raw.reserve(points.size());
    for (double x : points.points()) raw.push_back({x, x});
    return normalized(std::move(raw));
}

double IntervalUnion::min() const {
    require_nonempty(*this, "min");
    return intervals_.front().lo;
}

double IntervalUnion::max() const {
    require_nonempty(*this, "max");
    return intervals_.back().hi;
}

RealFiniteSet RealFiniteSet::from_values(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i - 1] < values[i])) {
            throw Error(Errc::duplicate_points,
                        "value " + std::to_string(values[i]) + " repeats");
        }
    }
    RealFiniteSet s;
    s.points_ = std::move(values);
    return s;
}

double RealFiniteSet::min() const {
    if (empty()) throw Error(Errc::empty_set, "min of empty set");
    return points_.front();
}

double RealFiniteSet::max() const {
    if (empty()) throw Error(Errc::empty_set, "max of empty set");
    return points_.back();
}

double real_finite_magnitude(const RealFiniteSet& a) {
    if (a.empty()) {
        throw Error(Errc::empty_set, "magnitude of the empty set is reserved "
                                     "to the explicit empty case");
    }
    const auto& pts = a.points();
    double mg = 1.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        mg += std::tanh((pts[i + 1] - pts[i]) / 2.0);
    }
    return mg;
}

double interval_union_magnitude(const IntervalUnion& u) {
    require_nonempty(u, "magnitude");
    const auto& ivs = u.intervals();
    double mg = 1.0;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        mg += (ivs[i].hi - ivs[i].lo) / 2.0;
        if (i + 1 < ivs.size()) {
            mg += std::tanh((ivs[i + 1].lo - ivs[i].hi) / 2.0);
        }
    }
    return mg;
}

IntervalUnion thicken(const IntervalUnion& u, double r) {
    if (!(r >= 0.0)) {
        throw Error(Errc::negative_radius, "thickening radius must be >= 0");
    }
    require_nonempty(u, "thicken");
    std::vector<Interval> widened;
    widened.reserve(u.intervals().size());
    for (const Interval& iv : u.intervals()) {
        widened.push_back({iv.lo - r, iv.hi + r});
    }
    return normalize_intervals(std::move(widened));
}

double distance_to(const IntervalUnion& u, double x) {
    require_nonempty(u, "distance_to");
    const auto& ivs = u.intervals();
    // First interval with lo > x; x can only touch it or its predecessor.
    auto it = std::upper_bound(
        ivs.begin(), ivs.end(), x,
        [](double value, const Interval& iv) { return value < iv.lo; });

    double best = std::numeric_limits<double>::infinity();
    if (it != ivs.end()) best = it->lo - x;
    if (it != ivs.begin()) {
        const Interval& prev = *(it - 1);
        best = std::min(best, x <= prev.hi ? 0.0 : x - prev.hi);
    }
    return best;
}

double hausdorff_real(const IntervalUnion& u, const IntervalUnion& v) {
    require_nonempty(u, "hausdorff_real");
    require_nonempty(v, "hausdorff_real");

    auto contains = [](const IntervalUnion& w, double x) {
        return distance_to(w, x) == 0.0;
    };
    auto directed = [&](const IntervalUnion& from, const IntervalUnion& to) {
        double worst = 0.0;
        for (const Interval& iv : from.intervals()) {
            worst = std::max(worst, distance_to(to, iv.lo));
            worst = std::max(worst, distance_to(to, iv.hi));
        }
        const auto& tos = to.intervals();
        for (std::size_t i = 0; i < tos.size(); ++i) {
            for (double x : {tos[i].lo, tos[i].hi}) {
                if (contains(from, x)) {
                    worst = std::max(worst, distance_to(to, x));
                }
            }
            if (i + 1 < tos.size()) {
                const double mid = tos[i].hi + (tos[i + 1].lo - tos[i].hi) / 2.0;
                if (contains(from, mid)) {
                    worst = std::max(worst, distance_to(to, mid));
                }
            }
        }
        return worst;
    };
    return std::max(directed(u, v), directed(v, u));
}

double lipschitz_coefficient(double a, double b) {
    if (!(a < b)) {
        throw Error(Errc::degenerate_interval, "need a < b");
    }
    return 1.0 + (b - a) / 2.0;
}

GrowthBound thickening_growth_bound(const RealFiniteSet& a, double r) {
    if (a.empty()) throw Error(Errc::empty_set, "growth bound of empty set");
    GrowthBound out;
    const IntervalUnion thickened = thicken(IntervalUnion::from_point_set(a), r);
    out.actual = interval_union_magnitude(thickened) - real_finite_magnitude(a);
    out.bound = r * (1.0 + (a.max() - a.min()) / 2.0);
    return out;
}

TanhGap tanh_gap_check(double x) {
    if (!(x > 0.0)) {
        throw Error(Errc::nonpositive_input, "tanh gap check needs x > 0");
    }
    const double th = std::tanh(x);
    return {th / x, 1.0 - th * th};
}

}  // namespace maglab
