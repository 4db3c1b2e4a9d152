#include "maglab/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

namespace maglab {

namespace {

std::string index_pair(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return labels;
}

double similarity_entry(double d) {
    return d > kSimilarityUnderflowDistance ? 0.0 : std::exp(-d);
}

}  // namespace

double lp_distance(std::span<const double> a, std::span<const double> b, double p) {
    if (a.size() != b.size()) {
        throw Error(Errc::dimension_mismatch, "point dimensions differ");
    }
    if (!(p >= 1.0)) {
        throw Error(Errc::invalid_argument, "norm exponent must be >= 1");
    }
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            m = std::max(m, std::fabs(a[i] - b[i]));
        }
        return m;
    }
    if (p == 1.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        return std::sqrt(s);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::pow(std::fabs(a[i] - b[i]), p);
    }
    return std::pow(s, 1.0 / p);
}

FiniteMetricSpace from_distance_matrix(const SquareMatrix& d,
                                       std::vector<std::string> labels) {
    const std::size_t n = d.size();
    if (!labels.empty() && labels.size() != n) {
        throw Error(Errc::invalid_argument, "label count does not match matrix size");
    }

    double max_dist = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = d(i, j);
            if (!std::isfinite(v)) {
                throw Error(Errc::not_a_metric,
                            "non-finite distance at " + index_pair(i, j));
            }
            max_dist = std::max(max_dist, std::fabs(v));
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (d(i, i) != 0.0) {
            throw Error(Errc::not_a_metric,
                        "nonzero diagonal at index " + std::to_string(i));
        }
    }
    const double sym_tol = kMetricSymmetryTol * max_dist;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(std::fabs(d(i, j) - d(j, i)) <= sym_tol)) {
                throw Error(Errc::not_a_metric,
                            "symmetry violated at " + index_pair(i, j));
            }
            if (!(d(i, j) > 0.0)) {
                throw Error(Errc::not_a_metric,
                            "nonpositive off-diagonal distance at " + index_pair(i, j));
            }
        }
    }
    const double tri_tol = kTriangleTol * max_dist;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (!(d(i, k) <= d(i, j) + d(j, k) + tri_tol)) {
                    throw Error(Errc::not_a_metric,
                                "triangle inequality violated for (" +
                                    std::to_string(i) + ", " + std::to_string(j) +
                                    ", " + std::to_string(k) + ")");
                }
            }
        }
    }

    FiniteMetricSpace m;
    m.n_ = n;
    m.d_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.d_[i * n + j] = d(i, j);
    }
    m.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
    return m;
}

FiniteMetricSpace from_points(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    for (const auto& pt : cloud.points) {
        if (pt.size() != cloud.dim) {
            throw Error(Errc::dimension_mismatch,
                        "point dimension does not match cloud dimension");
        }
    }

    FiniteMetricSpace m;
    m.n_ = n;
    m.d_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dist = lp_distance(cloud.points[i], cloud.points[j], cloud.p);
            if (!(dist > 0.0)) {
                throw Error(Errc::duplicate_points,
                            "points " + index_pair(i, j) + " coincide");
            }
            m.d_[i * n + j] = dist;
            m.d_[j * n + i] = dist;
        }
    }
    m.labels_ = default_labels(n);
    return m;
}

SquareMatrix similarity_matrix(const FiniteMetricSpace& m) {
    const std::size_t n = m.size();
    SquareMatrix z(n);
    for (std::size_t i = 0; i < n; ++i) {
        z(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = similarity_entry(m.distance(i, j));
            z(i, j) = v;
            z(j, i) = v;
        }
    }
    return z;
}

FiniteMetricSpace scale(const FiniteMetricSpace& m, double t) {
    if (!(t >= 0.0)) {
        throw Error(Errc::negative_scale, "scale factor must be >= 0");
    }
    FiniteMetricSpace out = m;
    for (double& v : out.d_) v *= t;
    out.zero_scaled_ = m.zero_scaled_ || t == 0.0;
    return out;
}

double magnitude(const FiniteMetricSpace& m) {
    if (m.empty()) return 0.0;
    if (m.zero_scaled()) return 1.0;
    return matrix_magnitude(similarity_matrix(m));
}

FiniteMetricSpace subspace(const FiniteMetricSpace& m,
                           std::span<const std::size_t> indices) {
    std::unordered_set<std::size_t> seen;
    for (std::size_t idx : indices) {
        if (idx >= m.size()) {
            throw Error(Errc::index_out_of_range,
                        "index " + std::to_string(idx) + " out of range");
        }
        if (!seen.insert(idx).second) {
            throw Error(Errc::duplicate_index,
                        "index " + std::to_string(idx) + " repeated");
        }
    }

    const std::size_t k = indices.size();
    FiniteMetricSpace out;
    out.n_ = k;
    out.d_.resize(k * k);
    out.labels_.resize(k);
    out.zero_scaled_ = m.zero_scaled_;
    for (std::size_t i = 0; i < k; ++i) {
        out.labels_[i] = m.labels()[indices[i]];
        for (std::size_t j = 0; j < k; ++j) {
            out.d_[i * k + j] = m.distance(indices[i], indices[j]);
        }
    }
    return out;
}

std::vector<MagnitudeFunctionSample> magnitude_function_samples(
    const FiniteMetricSpace& m, std::span<const double> ts) {
    for (std::size_t i = 1; i < ts.size(); ++i) {
        if (!(ts[i - 1] <= ts[i])) {
            throw Error(Errc::invalid_argument, "scale grid must be ascending");
        }
    }

    std::vector<MagnitudeFunctionSample> samples;
    samples.reserve(ts.size());
    for (double t : ts) {
        MagnitudeFunctionSample s;
        s.t = t;
        try {
            s.value = magnitude(scale(m, t));
        } catch (const Error& e) {
            s.ok = false;
            s.value = std::numeric_limits<double>::quiet_NaN();
            s.error = e.what();
        }
        samples.push_back(std::move(s));
    }
    return samples;
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
    if (a.size() == 0 || b.size() == 0) {
        throw Error(Errc::empty_set, "Hausdorff distance needs nonempty sets");
    }
    if (a.dim != b.dim || a.p != b.p) {
        throw Error(Errc::dimension_mismatch,
                    "clouds must share dimension and norm exponent");
    }

    auto directed = [&](const PointCloud& from, const PointCloud& to) {
        double worst = 0.0;
        for (const auto& x : from.points) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& y : to.points) {
                best = std::min(best, lp_distance(x, y, from.p));
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

}  // namespace maglab
