#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maglab/approximation.hpp"
#include "maglab/errors.hpp"
#include "maglab/experiments.hpp"
#include "maglab/file_formats.hpp"
#include "maglab/linalg.hpp"
#include "maglab/metric_space.hpp"
#include "maglab/real_line.hpp"

namespace py = pybind11;

namespace {

maglab::SquareMatrix to_matrix(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    maglab::SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw maglab::Error(maglab::Errc::invalid_argument,
                                "matrix rows must all have length n");
        }
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<double>> from_matrix(const maglab::SquareMatrix& m) {
    std::vector<std::vector<double>> rows(m.size(),
                                          std::vector<double>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
    }
    return rows;
}

maglab::PointCloud to_cloud(const std::vector<std::vector<double>>& points,
                            double p) {
    maglab::PointCloud cloud;
    cloud.dim = points.empty() ? 0 : points.front().size();
    cloud.p = p;
    cloud.points = points;
    return cloud;
}

maglab::IntervalUnion to_union(
    const std::vector<std::pair<double, double>>& pairs) {
    std::vector<maglab::Interval> raw;
    raw.reserve(pairs.size());
    for (const auto& [lo, hi] : pairs) raw.push_back({lo, hi});
    return maglab::normalize_intervals(std::move(raw));
}

std::vector<std::pair<double, double>> from_union(const maglab::IntervalUnion& u) {
    std::vector<std::pair<double, double>> out;
    out.reserve(u.intervals().size());
    for (const auto& iv : u.intervals()) out.emplace_back(iv.lo, iv.hi);
    return out;
}

}  // namespace

PYBIND11_MODULE(_maglab, m) {
    m.doc() = "magnitude of finite metric spaces and compact subsets of the "
              "real line";

    py::register_exception<maglab::Error>(m, "MaglabError");

    py::class_<maglab::PdCertificate>(m, "PdCertificate")
        .def_readonly("is_pd", &maglab::PdCertificate::is_pd)
        .def_readonly("min_pivot", &maglab::PdCertificate::min_pivot);

    py::class_<maglab::Weighting>(m, "Weighting")
        .def_readonly("components", &maglab::Weighting::components)
        .def_readonly("residual", &maglab::Weighting::residual);

    m.def(
        "check_positive_definite",
        [](const std::vector<std::vector<double>>& a) {
            return maglab::check_positive_definite(to_matrix(a));
        },
        py::arg("matrix"));
    m.def(
        "solve_weighting",
        [](const std::vector<std::vector<double>>& a) {
            return maglab::solve_weighting(to_matrix(a));
        },
        py::arg("matrix"));
    m.def(
        "matrix_magnitude",
        [](const std::vector<std::vector<double>>& a) {
            return maglab::matrix_magnitude(to_matrix(a));
        },
        py::arg("matrix"));
    m.def(
        "magnitude_via_adjugate",
        [](const std::vector<std::vector<double>>& a) {
            return maglab::magnitude_via_adjugate(to_matrix(a));
        },
        py::arg("matrix"));

    py::class_<maglab::FiniteMetricSpace>(m, "FiniteMetricSpace")
        .def("__len__", &maglab::FiniteMetricSpace::size)
        .def("distance", &maglab::FiniteMetricSpace::distance, py::arg("i"),
             py::arg("j"))
        .def_property_readonly("labels", &maglab::FiniteMetricSpace::labels)
        .def_property_readonly("zero_scaled",
                               &maglab::FiniteMetricSpace::zero_scaled);

    m.def(
        "from_distance_matrix",
        [](const std::vector<std::vector<double>>& d,
           std::vector<std::string> labels) {
            return maglab::from_distance_matrix(to_matrix(d), std::move(labels));
        },
        py::arg("distances"), py::arg("labels") = std::vector<std::string>{});
    m.def(
        "from_points",
        [](const std::vector<std::vector<double>>& points, double p) {
            return maglab::from_points(to_cloud(points, p));
        },
        py::arg("points"), py::arg("p") = 2.0);
    m.def(
        "similarity_matrix",
        [](const maglab::FiniteMetricSpace& space) {
            return from_matrix(maglab::similarity_matrix(space));
        },
        py::arg("space"));
    m.def("scale", &maglab::scale, py::arg("space"), py::arg("t"));
    m.def("magnitude", &maglab::magnitude, py::arg("space"));
    m.def(
        "subspace",
        [](const maglab::FiniteMetricSpace& space,
           const std::vector<std::size_t>& indices) {
            return maglab::subspace(space, indices);
        },
        py::arg("space"), py::arg("indices"));

    py::class_<maglab::MagnitudeFunctionSample>(m, "MagnitudeFunctionSample")
        .def_readonly("t", &maglab::MagnitudeFunctionSample::t)
        .def_readonly("value", &maglab::MagnitudeFunctionSample::value)
        .def_readonly("ok", &maglab::MagnitudeFunctionSample::ok)
        .def_readonly("error", &maglab::MagnitudeFunctionSample::error);

    m.def(
        "magnitude_function_samples",
        [](const maglab::FiniteMetricSpace& space, const std::vector<double>& ts) {
            return maglab::magnitude_function_samples(space, ts);
        },
        py::arg("space"), py::arg("ts"));
    m.def(
        "hausdorff_distance",
        [](const std::vector<std::vector<double>>& a,
           const std::vector<std::vector<double>>& b, double p) {
            return maglab::hausdorff_distance(to_cloud(a, p), to_cloud(b, p));
        },
        py::arg("points_a"), py::arg("points_b"), py::arg("p") = 2.0);

    m.def(
        "real_finite_magnitude",
        [](std::vector<double> points) {
            return maglab::real_finite_magnitude(
                maglab::RealFiniteSet::from_values(std::move(points)));
        },
        py::arg("points"));
    m.def(
        "interval_union_magnitude",
        [](const std::vector<std::pair<double, double>>& intervals) {
            return maglab::interval_union_magnitude(to_union(intervals));
        },
        py::arg("intervals"));
    m.def(
        "normalize_intervals",
        [](const std::vector<std::pair<double, double>>& intervals) {
            return from_union(to_union(intervals));
        },
        py::arg("intervals"));
    m.def(
        "thicken",
        [](const std::vector<std::pair<double, double>>& intervals, double r) {
            return from_union(maglab::thicken(to_union(intervals), r));
        },
        py::arg("intervals"), py::arg("r"));
    m.def(
        "hausdorff_real",
        [](const std::vector<std::pair<double, double>>& u,
           const std::vector<std::pair<double, double>>& v) {
            return maglab::hausdorff_real(to_union(u), to_union(v));
        },
        py::arg("u"), py::arg("v"));
    m.def("lipschitz_coefficient", &maglab::lipschitz_coefficient, py::arg("a"),
          py::arg("b"));
    m.def(
        "thickening_growth_bound",
        [](std::vector<double> points, double r) {
            const auto gb = maglab::thickening_growth_bound(
                maglab::RealFiniteSet::from_values(std::move(points)), r);
            return std::make_pair(gb.actual, gb.bound);
        },
        py::arg("points"), py::arg("r"));
    m.def(
        "tanh_gap_check",
        [](double x) {
            const auto tg = maglab::tanh_gap_check(x);
            return std::make_pair(tg.lhs, tg.rhs);
        },
        py::arg("x"));

    py::class_<maglab::ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("mesh_sequence", &maglab::ConvergenceReport::mesh_sequence)
        .def_readonly("net_sizes", &maglab::ConvergenceReport::net_sizes)
        .def_readonly("magnitudes", &maglab::ConvergenceReport::magnitudes)
        .def_readonly("estimate", &maglab::ConvergenceReport::estimate)
        .def_readonly("last_increment", &maglab::ConvergenceReport::last_increment)
        .def_readonly("converged", &maglab::ConvergenceReport::converged);

    m.def(
        "uniform_net",
        [](const std::vector<std::pair<double, double>>& intervals, double mesh) {
            return maglab::uniform_net(to_union(intervals), mesh).points();
        },
        py::arg("intervals"), py::arg("mesh"));
    m.def(
        "grid_net_lp",
        [](const std::vector<std::pair<double, double>>& sides, double mesh,
           double p, std::size_t max_points) {
            maglab::Box box;
            for (const auto& [lo, hi] : sides) box.sides.push_back({lo, hi});
            return maglab::grid_net_lp(box, mesh, p, max_points).points;
        },
        py::arg("sides"), py::arg("mesh"), py::arg("p") = 2.0,
        py::arg("max_points") = maglab::kDefaultMaxNetPoints);
    m.def(
        "estimate_interval_magnitude",
        [](const std::vector<std::pair<double, double>>& intervals,
           const std::vector<double>& meshes, double stop_tol,
           std::size_t max_points) {
            const maglab::IntervalUnion domain = to_union(intervals);
            return maglab::estimate_compact_magnitude(
                [&domain](double mesh) {
                    const auto net = maglab::uniform_net(domain, mesh);
                    maglab::PointCloud cloud;
                    cloud.dim = 1;
                    cloud.p = 1.0;
                    for (double x : net.points()) cloud.points.push_back({x});
                    return maglab::from_points(cloud);
                },
                meshes, stop_tol, max_points);
        },
        py::arg("intervals"), py::arg("meshes"),
        py::arg("stop_tol") = maglab::kDefaultStopTol,
        py::arg("max_points") = maglab::kDefaultMaxNetPoints);

    py::class_<maglab::OnePointCurve>(m, "OnePointCurve")
        .def_readonly("samples", &maglab::OnePointCurve::samples)
        .def_readonly("final_deviation", &maglab::OnePointCurve::final_deviation);

    m.def(
        "one_point_curve",
        [](const maglab::FiniteMetricSpace& space, const std::vector<double>& ts) {
            return maglab::one_point_curve(space, ts);
        },
        py::arg("space"), py::arg("ts"));
    m.def("kt_truncation", &maglab::kt_truncation, py::arg("t"),
          py::arg("n_terms"));

    py::class_<maglab::CounterexampleReport>(m, "CounterexampleReport")
        .def_readonly("family", &maglab::CounterexampleReport::family)
        .def_readonly("epsilon", &maglab::CounterexampleReport::epsilon)
        .def_readonly("delta", &maglab::CounterexampleReport::delta)
        .def_readonly("lipschitz_c", &maglab::CounterexampleReport::lipschitz_c)
        .def_readonly("n", &maglab::CounterexampleReport::n)
        .def_readonly("set_a", &maglab::CounterexampleReport::set_a)
        .def_readonly("set_b", &maglab::CounterexampleReport::set_b)
        .def_readonly("hausdorff", &maglab::CounterexampleReport::hausdorff)
        .def_readonly("magnitude_gap", &maglab::CounterexampleReport::magnitude_gap)
        .def_readonly("violates", &maglab::CounterexampleReport::violates);

    m.def("halfline_counterexample", &maglab::halfline_counterexample, py::arg("eps"),
          py::arg("delta"));
    m.def("naturals_counterexample", &maglab::naturals_counterexample,
          py::arg("c"));

    m.def("load_point_cloud", [](const std::string& path) {
        const maglab::PointCloud cloud = maglab::load_point_cloud(path);
        return std::make_pair(cloud.points, cloud.p);
    });
    m.def("load_interval_union", [](const std::string& path) {
        return from_union(maglab::load_interval_union(path));
    });

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
