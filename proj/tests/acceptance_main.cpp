// Acceptance suite: every check the library must pass at desk scale, one
// verdict line per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "maglab/approximation.hpp"
#include "maglab/experiments.hpp"
#include "maglab/linalg.hpp"
#include "maglab/metric_space.hpp"
#include "maglab/real_line.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace maglab;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": "
              << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

std::string fmt(double v) { return format_double(v); }

// 1. Two-point spaces match 2/(1 + e^{-u}) across 50 separations.
void criterion_two_point() {
    double worst = 0.0;
    for (int k = 1; k <= 50; ++k) {
        const double u = 0.4 * k;
        const double solved = magnitude(testsupport::real_line_space({0.0, u}));
        const double closed = 2.0 / (1.0 + std::exp(-u));
        worst = std::max(worst, std::fabs(solved - closed));
    }
    report(1, "two-point closed form on 50 separations", worst <= 1e-10,
           "max |solver - closed| = " + fmt(worst));
}

// 2. Solver agrees with the line closed form on 500 random sets.
void criterion_line_closed_form() {
    testsupport::Rand rng(101);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto pts = testsupport::random_real_points(rng, 12, 0.0, 20.0);
        const double closed =
            real_finite_magnitude(RealFiniteSet::from_values(pts));
        const double solved = magnitude(testsupport::real_line_space(pts));
        worst = std::max(worst, std::fabs(closed - solved));
    }
    report(2, "closed form vs solver on 500 random line sets", worst <= 1e-8,
           "max gap = " + fmt(worst));
}

// 3. Net refinement reproduces interval magnitudes within tight tolerances.
void criterion_interval_estimates() {
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<double> schedule;
    for (int k = 0; k <= 10; ++k) schedule.push_back(std::ldexp(1.0, -k));
    auto net_at = [](const IntervalUnion& u) {
        return [&u](double mesh) {
            return testsupport::real_line_space(uniform_net(u, mesh).points());
        };
    };

    const IntervalUnion unit = normalize_intervals({{0.0, 1.0}});
    const ConvergenceReport unit_rep =
        estimate_compact_magnitude(net_at(unit), schedule);
    const double unit_err = std::fabs(unit_rep.estimate - 1.5);

    const IntervalUnion pair = normalize_intervals({{0.0, 1.0}, {2.0, 3.0}});
    const ConvergenceReport pair_rep =
        estimate_compact_magnitude(net_at(pair), schedule);
    const double pair_err =
        std::fabs(pair_rep.estimate - (2.0 + std::tanh(0.5)));

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool ok = unit_rep.converged && unit_err <= 5e-6 &&
                    pair_rep.converged && pair_err <= 1e-5 && seconds < 10.0;
    report(3, "interval magnitude estimates",
           ok,
           "[0,1] err " + fmt(unit_err) + ", union err " + fmt(pair_err) +
               ", " + fmt(seconds) + " s");
}

// 4. 10000-trial scans stay below the Lipschitz coefficient.
void criterion_lipschitz_scans() {
    const RunRecord narrow = lipschitz_scan(0.0, 1.0, 10000, 20240001);
    const RunRecord wide = lipschitz_scan(0.0, 10.0, 10000, 20240002);

    auto max_ratio = [](const RunRecord& rec) {
        const auto& row = rec.table.rows.back();
        return std::strtod(row[7].c_str(), nullptr);
    };
    const double narrow_max = max_ratio(narrow);
    const double wide_max = max_ratio(wide);
    const bool ok = narrow.all_passed() && wide.all_passed() &&
                    narrow_max <= 1.5 + 1e-9 && wide_max <= 6.0 + 1e-9;
    report(4, "10000-trial Lipschitz ratio scans", ok,
           "[0,1] max " + fmt(narrow_max) + " <= 1.5, [0,10] max " +
               fmt(wide_max) + " <= 6");
}

// 5. Thickening growth obeys its linear bound on 1000 random draws.
void criterion_thickening_growth() {
    testsupport::Rand rng(505);
    double worst_excess = -1.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto pts = testsupport::random_real_points(rng, 20, 0.0, 10.0);
        const double r = rng.uniform(0.0, 5.0);
        const GrowthBound gb =
            thickening_growth_bound(RealFiniteSet::from_values(pts), r);
        worst_excess = std::max(worst_excess, gb.actual - gb.bound);
    }
    report(5, "thickening growth bound on 1000 random (A, r)",
           worst_excess <= 1e-10, "max actual - bound = " + fmt(worst_excess));
}

// 6. tanh(x)/x >= 1 - tanh^2(x) along a 200-point log grid.
void criterion_tanh_inequality() {
    double worst = 1.0;
    for (int k = 0; k <= 200; ++k) {
        const double x = 1e-8 * std::pow(50.0 / 1e-8, k / 200.0);
        const TanhGap g = tanh_gap_check(x);
        worst = std::min(worst, g.lhs - g.rhs);
    }
    report(6, "tanh slope inequality on the log grid", worst >= -1e-12,
           "min lhs - rhs = " + fmt(worst));
}

// 7. Half-line counterexamples have the exact advertised gaps.
void criterion_halfline_counterexample() {
    bool ok = true;
    std::string detail;
    const std::pair<double, double> cases[] = {{1.0, 1.0}, {0.1, 0.5}, {2.0, 0.25}};
    for (const auto& [eps, delta] : cases) {
        const CounterexampleReport r = halfline_counterexample(eps, delta);
        const double expected =
            static_cast<double>(r.n) * (delta - std::tanh(delta)) +
            std::tanh(delta);
        const bool this_ok = std::fabs(r.magnitude_gap - expected) <= 1e-10 &&
                             r.magnitude_gap > eps && r.hausdorff == delta;
        ok = ok && this_ok;
        if (!detail.empty()) detail += ", ";
        detail += "n=" + std::to_string(r.n) + " gap=" + fmt(r.magnitude_gap);
    }
    report(7, "uniform-continuity counterexamples on the half-line", ok, detail);
}

// 8. Naturals counterexamples defeat every tested Lipschitz coefficient.
void criterion_naturals_counterexample() {
    bool ok = true;
    std::string detail;
    for (double c : {0.1, 1.0, 5.0}) {
        const CounterexampleReport r = naturals_counterexample(c);
        const double expected = static_cast<double>(r.n) *
                                (2.0 * std::tanh(0.5) - std::tanh(1.0));
        const bool this_ok = std::fabs(r.magnitude_gap - expected) <= 1e-10 &&
                             r.magnitude_gap > c * r.hausdorff &&
                             r.hausdorff == 1.0;
        ok = ok && this_ok;
        if (!detail.empty()) detail += ", ";
        detail += "N=" + std::to_string(r.n) + " gap=" + fmt(r.magnitude_gap);
    }
    report(8, "Lipschitz counterexamples on the naturals", ok, detail);
}

// 9. Nested subsets never lose magnitude, in l1 and l2.
void criterion_inclusion_monotonicity() {
    testsupport::Rand rng(909090);
    double worst = 0.0;
    int checked = 0;
    while (checked < 1000) {
        const double p = (checked % 2 == 0) ? 1.0 : 2.0;
        const PointCloud cloud = testsupport::random_cloud(rng, 3, 15, p, 2.0);
        const FiniteMetricSpace space = from_points(cloud);

        std::vector<std::size_t> inner, outer;
        for (std::size_t i = 0; i < space.size(); ++i) {
            const auto draw = rng.count(0, 2);
            if (draw == 0) inner.push_back(i);
            if (draw <= 1) outer.push_back(i);
        }
        if (inner.empty()) continue;
        std::vector<std::size_t> nested = inner;
        for (std::size_t i : outer) {
            bool seen = false;
            for (std::size_t j : nested) seen = seen || i == j;
            if (!seen) nested.push_back(i);
        }
        const double small = magnitude(subspace(space, inner));
        const double large = magnitude(subspace(space, nested));
        worst = std::max(worst, small - large);
        ++checked;
    }
    report(9, "inclusion-monotonicity on 1000 nested pairs", worst <= 1e-10,
           "max mg(F') - mg(F'') = " + fmt(worst));
}

// 10. Truncations stay below e^{t/2} and grow with depth.
void criterion_kt_bound() {
    bool ok = true;
    double worst_excess = -1.0;
    for (double t : {0.25, 0.5, 1.0, 2.0}) {
        const double bound = std::exp(t / 2.0);
        double prev = 0.0;
        for (std::size_t depth : {std::size_t{1}, std::size_t{5}, std::size_t{10},
                                  std::size_t{20}}) {
            const double value = magnitude(kt_truncation(t, depth));
            worst_excess = std::max(worst_excess, value - bound);
            ok = ok && value <= bound + 1e-8 && value >= prev - 1e-10;
            prev = value;
        }
    }
    report(10, "l1 truncation magnitudes below e^{t/2}", ok,
           "max value - bound = " + fmt(worst_excess));
}

// 11. One-point curves respect the linear deviation bound on the line.
void criterion_one_point() {
    testsupport::Rand rng(111);
    const std::vector<double> ts = {1.0, 0.3, 0.1, 0.03, 0.01, 0.003, 0.001};
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        const auto pts = testsupport::random_real_points(rng, 10, 0.0, 5.0);
        const FiniteMetricSpace space = testsupport::real_line_space(pts);
        const double span = pts.back() - pts.front();
        const OnePointCurve curve = one_point_curve(space, ts);
        for (const auto& s : curve.samples) {
            ok = ok && (s.value - 1.0 <= s.t / 2.0 * span + 1e-10);
        }
    }
    const OnePointCurve pair =
        one_point_curve(testsupport::real_line_space({0.0, 1.0}),
                        std::vector<double>{0.001});
    const double tail = pair.samples.back().value - 1.0;
    ok = ok && tail <= 6e-4;
    report(11, "one-point curves below the linear bound", ok,
           "{0,1} at t=1e-3 deviates " + fmt(tail));
}

// 12. Cholesky path and cofactor oracle agree on 200 random matrices.
void criterion_oracle_agreement() {
    testsupport::Rand rng(121212);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const double p = (trial % 2 == 0) ? 1.0 : 2.0;
        const PointCloud cloud = testsupport::random_cloud(rng, 3, 6, p, 1.5);
        const SquareMatrix z = similarity_matrix(from_points(cloud));
        const double solved = matrix_magnitude(z);
        const double oracle = magnitude_via_adjugate(z);
        worst = std::max(worst, std::fabs(solved - oracle) /
                                    std::max(1.0, std::fabs(solved)));
    }
    report(12, "Cholesky vs adjugate oracle on 200 matrices", worst <= 1e-9,
           "max relative gap = " + fmt(worst));
}

// 13. Same config and seed give byte-identical results.csv.
void criterion_cli_determinism() {
    const fs::path base = fs::temp_directory_path() / "maglab-acceptance";
    fs::remove_all(base);
    fs::create_directories(base);

    const fs::path cfg_path = base / "scan.cfg";
    {
        std::ofstream cfg(cfg_path);
        cfg << "kind = lipschitz-scan\na = 0\nb = 1\ntrials = 300\nseed = 7\n";
    }

    ExperimentConfig cfg = ExperimentConfig::parse_file(cfg_path.string());
    cfg.out_dir = (base / "a").string();
    const RunRecord rec_a = run(cfg);
    cfg.out_dir = (base / "b").string();
    const RunRecord rec_b = run(cfg);

    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    };
    const std::string bytes_a = slurp(rec_a.csv_path);
    const std::string bytes_b = slurp(rec_b.csv_path);
    const bool ok = !bytes_a.empty() && bytes_a == bytes_b &&
                    rec_a.all_passed() && rec_b.all_passed();
    report(13, "run determinism for identical config and seed", ok,
           std::to_string(bytes_a.size()) + " bytes each");
}

}  // namespace

int main() {
    criterion_two_point();
    criterion_line_closed_form();
    criterion_interval_estimates();
    criterion_lipschitz_scans();
    criterion_thickening_growth();
    criterion_tanh_inequality();
    criterion_halfline_counterexample();
    criterion_naturals_counterexample();
    criterion_inclusion_monotonicity();
    criterion_kt_bound();
    criterion_one_point();
    criterion_oracle_agreement();
    criterion_cli_determinism();

    if (failures == 0) {
        std::cout << "all 13 criteria passed\n";
        return EXIT_SUCCESS;
    }
    std::cout << failures << " criteria failed\n";
    return EXIT_FAILURE;
}
