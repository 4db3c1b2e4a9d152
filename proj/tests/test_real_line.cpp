#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "maglab/metric_space.hpp"
#include "maglab/real_line.hpp"
#include "test_support.hpp"

using namespace maglab;

namespace {

Errc catch_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a maglab::Error");
    return Errc::invalid_argument;
}

RealFiniteSet set_of(std::vector<double> pts) {
    return RealFiniteSet::from_values(std::move(pts));
}

IntervalUnion union_of(std::vector<Interval> ivs) {
    return normalize_intervals(std::move(ivs));
}

}  // namespace

TEST_CASE("finite magnitude on the line") {
    CHECK(real_finite_magnitude(set_of({5.0})) == 1.0);
    CHECK(real_finite_magnitude(set_of({0.0, 1.0})) ==
          doctest::Approx(1.4621171572600098).epsilon(1e-15));
    CHECK(real_finite_magnitude(set_of({0.0, 1.0, 2.0})) ==
          doctest::Approx(1.9242343145200196).epsilon(1e-15));
    CHECK(catch_code([] { real_finite_magnitude(RealFiniteSet::from_values({})); }) ==
          Errc::empty_set);
    CHECK(catch_code([] { set_of({1.0, 1.0}); }) == Errc::duplicate_points);
}

TEST_CASE("interval union magnitude") {
    CHECK(interval_union_magnitude(union_of({{0, 1}})) == 1.5);
    CHECK(interval_union_magnitude(union_of({{0, 1}, {2, 3}})) ==
          doctest::Approx(2.4621171572600096).epsilon(1e-15));

    // Degenerate unions recover the finite-set formula.
    const IntervalUnion degenerate = union_of({{0, 0}, {1, 1}, {2, 2}});
    CHECK(interval_union_magnitude(degenerate) ==
          real_finite_magnitude(set_of({0.0, 1.0, 2.0})));

    CHECK(catch_code([] { interval_union_magnitude(IntervalUnion::empty()); }) ==
          Errc::empty_set);
}

TEST_CASE("normalization sorts and merges") {
    const IntervalUnion overlap = union_of({{0, 1}, {0.5, 2}});
    REQUIRE(overlap.intervals().size() == 1);
    CHECK(overlap.intervals()[0].lo == 0.0);
    CHECK(overlap.intervals()[0].hi == 2.0);

    const IntervalUnion touching = union_of({{0, 1}, {1, 2}});
    REQUIRE(touching.intervals().size() == 1);
    CHECK(touching.intervals()[0].hi == 2.0);

    const IntervalUnion sorted = union_of({{2, 3}, {0, 1}});
    REQUIRE(sorted.intervals().size() == 2);
    CHECK(sorted.intervals()[0].lo == 0.0);
    CHECK(sorted.intervals()[1].lo == 2.0);

    CHECK(catch_code([] { normalize_intervals({{1.0, 0.0}}); }) ==
          Errc::inverted_interval);
}

TEST_CASE("thickening") {
    const IntervalUnion pt = union_of({{0, 0}});
    const IntervalUnion thick = thicken(pt, 1.0);
    REQUIRE(thick.intervals().size() == 1);
    CHECK(thick.intervals()[0].lo == -1.0);
    CHECK(thick.intervals()[0].hi == 1.0);

    // Gap 3 with radius 1 stays split; gap 1 merges.
    CHECK(thicken(union_of({{0, 0}, {3, 3}}), 1.0).intervals().size() == 2);
    const IntervalUnion merged = thicken(union_of({{0, 0}, {1, 1}}), 1.0);
    REQUIRE(merged.intervals().size() == 1);
    CHECK(merged.intervals()[0].lo == -1.0);
    CHECK(merged.intervals()[0].hi == 2.0);

    CHECK(catch_code([&] { thicken(pt, -0.5); }) == Errc::negative_radius);
}

TEST_CASE("distance to a union") {
    const IntervalUnion u = union_of({{0, 1}, {3, 4}});
    CHECK(distance_to(u, 0.5) == 0.0);
    CHECK(distance_to(u, 1.0) == 0.0);
    CHECK(distance_to(u, 2.0) == 1.0);
    CHECK(distance_to(u, 2.7) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(distance_to(u, -2.0) == 2.0);
    CHECK(distance_to(u, 6.0) == 2.0);
}

TEST_CASE("hausdorff distance between unions") {
    const IntervalUnion u = union_of({{0, 1}});
    CHECK(hausdorff_real(u, u) == 0.0);

    // Odd multiples of delta against the covering segment.
    const IntervalUnion odds =
        IntervalUnion::from_point_set(set_of({1.0, 3.0, 5.0, 7.0, 9.0}));
    const IntervalUnion segment = union_of({{0.0, 10.0}});
    CHECK(hausdorff_real(odds, segment) == 1.0);

    const IntervalUnion v = union_of({{0, 1}, {2, 3}});
    CHECK(hausdorff_real(u, v) == 2.0);

    CHECK(catch_code([&] { hausdorff_real(u, IntervalUnion::empty()); }) ==
          Errc::empty_set);
}

TEST_CASE("hausdorff agrees with dense sampling on random unions") {
    testsupport::Rand rng(8080);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Interval> raw_u, raw_v;
        const std::size_t nu = rng.count(1, 4), nv = rng.count(1, 4);
        for (std::size_t i = 0; i < nu; ++i) {
            const double lo = rng.uniform(0, 9);
            raw_u.push_back({lo, lo + rng.uniform(0, 1)});
        }
        for (std::size_t i = 0; i < nv; ++i) {
            const double lo = rng.uniform(0, 9);
            raw_v.push_back({lo, lo + rng.uniform(0, 1)});
        }
        const IntervalUnion u = union_of(raw_u), v = union_of(raw_v);
        const double exact = hausdorff_real(u, v);

        double sampled = 0.0;
        const double step = 1e-4;
        auto directed = [&](const IntervalUnion& from, const IntervalUnion& to) {
            for (const Interval& iv : from.intervals()) {
                for (double x = iv.lo; x < iv.hi + step; x += step) {
                    sampled = std::max(sampled, distance_to(to, std::min(x, iv.hi)));
                }
            }
        };
        directed(u, v);
        directed(v, u);
        CHECK(std::fabs(exact - sampled) <= 1e-4);
        CHECK(exact >= sampled - 1e-12);  // sampling never beats the exact sup
    }
}

TEST_CASE("lipschitz coefficient") {
    CHECK(lipschitz_coefficient(0.0, 1.0) == 1.5);
    CHECK(lipschitz_coefficient(0.0, 2.0) == 2.0);
    CHECK(lipschitz_coefficient(-1.0, 1.0) == 2.0);
    CHECK(catch_code([] { lipschitz_coefficient(1.0, 1.0); }) ==
          Errc::degenerate_interval);
}

TEST_CASE("thickening growth against its linear bound") {
    const GrowthBound zero = thickening_growth_bound(set_of({0.0, 2.0}), 0.0);
    CHECK(zero.actual == 0.0);
    CHECK(zero.bound == 0.0);

    const GrowthBound singleton = thickening_growth_bound(set_of({0.0}), 1.0);
    CHECK(singleton.actual == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(singleton.bound == 1.0);

    const GrowthBound spread = thickening_growth_bound(set_of({0.0, 10.0}), 1.0);
    CHECK(spread.actual == doctest::Approx(1.9994200954764718).epsilon(1e-14));
    CHECK(spread.bound == 6.0);
    CHECK(spread.actual <= spread.bound + 1e-10);
}

TEST_CASE("growth bound holds for random sets and radii") {
    testsupport::Rand rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pts = testsupport::random_real_points(rng, 20, 0.0, 10.0);
        const double r = rng.uniform(0.0, 5.0);
        const GrowthBound gb = thickening_growth_bound(set_of(pts), r);
        CHECK(gb.actual <= gb.bound + 1e-10);
    }
}

TEST_CASE("thickening is monotone in the radius") {
    testsupport::Rand rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pts = testsupport::random_real_points(rng, 10, 0.0, 10.0);
        const IntervalUnion base = IntervalUnion::from_point_set(set_of(pts));
        const double r1 = rng.uniform(0.0, 3.0);
        const double r2 = r1 + rng.uniform(0.0, 2.0);
        CHECK(interval_union_magnitude(thicken(base, r1)) <=
              interval_union_magnitude(thicken(base, r2)) + 1e-12);
    }
}

TEST_CASE("tanh gap inequality") {
    const TanhGap tiny = tanh_gap_check(1e-6);
    CHECK(std::fabs(tiny.lhs - tiny.rhs) <= 1e-11);

    const TanhGap one = tanh_gap_check(1.0);
    CHECK(one.lhs == doctest::Approx(0.7615941559557649).epsilon(1e-15));
    CHECK(one.rhs == doctest::Approx(0.41997434161402614).epsilon(1e-15));

    const TanhGap ten = tanh_gap_check(10.0);
    CHECK(ten.lhs == doctest::Approx(0.09999999958776927).epsilon(1e-15));
    CHECK(ten.rhs == doctest::Approx(8.244614546626394e-09).epsilon(1e-9));

    CHECK(catch_code([] { tanh_gap_check(0.0); }) == Errc::nonpositive_input);

    // Log grid from 1e-8 to 50.
    for (int k = 0; k <= 200; ++k) {
        const double x = 1e-8 * std::pow(50.0 / 1e-8, k / 200.0);
        const TanhGap g = tanh_gap_check(x);
        CHECK(g.lhs >= g.rhs - 1e-12);
    }
}

TEST_CASE("closed form matches the solver on random finite sets") {
    testsupport::Rand rng(909);
    for (int trial = 0; trial < 120; ++trial) {
        const auto pts = testsupport::random_real_points(rng, 12, 0.0, 20.0);
        const double closed = real_finite_magnitude(set_of(pts));
        const double solved = magnitude(testsupport::real_line_space(pts));
        CHECK(std::fabs(closed - solved) <= 1e-8);
    }
}

TEST_CASE("inclusion-monotone on the line") {
    testsupport::Rand rng(2468);
    for (int trial = 0; trial < 100; ++trial) {
        const auto pts = testsupport::random_real_points(rng, 15, 0.0, 10.0);
        std::vector<double> subset;
        for (double x : pts) {
            if (rng.count(0, 1) == 0) subset.push_back(x);
        }
        if (subset.empty()) continue;
        CHECK(real_finite_magnitude(set_of(subset)) <=
              real_finite_magnitude(set_of(pts)) + 1e-12);
    }
}

TEST_CASE("magnitude difference obeys the lipschitz coefficient") {
    testsupport::Rand rng(13579);
    const double a = 0.0, b = 1.0;
    const double coeff = lipschitz_coefficient(a, b);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pa = testsupport::random_real_points(rng, 20, a, b);
        const auto pb = testsupport::random_real_points(rng, 20, a, b);
        const double dh = hausdorff_real(IntervalUnion::from_point_set(set_of(pa)),
                                         IntervalUnion::from_point_set(set_of(pb)));
        if (dh == 0.0) continue;
        const double gap =
            std::fabs(real_finite_magnitude(set_of(pa)) -
                      real_finite_magnitude(set_of(pb)));
        CHECK(gap <= coeff * dh + 1e-10);
    }
}
