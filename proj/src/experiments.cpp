#include "maglab/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "maglab/approximation.hpp"
#include "maglab/errors.hpp"
#include "maglab/file_formats.hpp"
#include "maglab/metric_space.hpp"
#include "maglab/plot.hpp"
#include "maglab/real_line.hpp"

namespace maglab {

namespace {

constexpr double kScanRatioTol = 1e-9;
constexpr double kGapTol = 1e-10;
constexpr double kHausdorffMatchTol = 1e-12;
constexpr double kKtBoundTol = 1e-8;
constexpr double kKtMonotoneTol = 1e-10;
constexpr double kOnePointBoundTol = 1e-10;
constexpr double kDedupSpacing = 1e-9;

[[noreturn]] void config_fail(const std::string& what) {
    throw Error(Errc::config_error, what);
}

double parse_number(const std::string& text, const std::string& key) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        config_fail("key '" + key + "' needs a number, got '" + text + "'");
    }
    return v;
}

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& key) {
    std::vector<double> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item, key));
    if (out.empty()) config_fail("key '" + key + "' needs a nonempty list");
    return out;
}

std::vector<std::size_t> parse_count_list(const std::string& text,
                                          const std::string& key) {
    std::vector<std::size_t> out;
    for (double v : parse_number_list(text, key)) {
        if (!(v >= 1.0) || v != std::floor(v)) {
            config_fail("key '" + key + "' needs positive integers");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

std::string join_list(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += format_double(values[i]);
    }
    return out;
}

std::string join_counts(const std::vector<std::size_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

std::string join_points(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += " ";
        out += format_double(values[i]);
    }
    return out;
}

// Deterministic sampling on top of the standard engine: the distribution
// mapping is pinned here rather than borrowed from
// std::uniform_real_distribution, whose stream is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        const double unit = std::ldexp(static_cast<double>(gen_() >> 11), -53);
        return lo + (hi - lo) * unit;
    }

    std::size_t uniform_count(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(gen_() % (hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

// Size uniform in 1..20, points i.i.d. uniform in [a, b], sorted, then
// deduplicated at spacing 1e-9 to keep similarity matrices well conditioned.
RealFiniteSet random_subset(Rng& rng, double a, double b) {
    const std::size_t size = rng.uniform_count(1, 20);
    std::vector<double> draws(size);
    for (double& x : draws) x = rng.uniform(a, b);
    std::sort(draws.begin(), draws.end());
    std::vector<double> kept;
    for (double x : draws) {
        if (kept.empty() || x - kept.back() >= kDedupSpacing) kept.push_back(x);
    }
    return RealFiniteSet::from_values(std::move(kept));
}

FiniteMetricSpace real_line_space(const RealFiniteSet& set) {
    PointCloud cloud;
    cloud.dim = 1;
    cloud.p = 1.0;
    cloud.points.reserve(set.size());
    for (double x : set.points()) cloud.points.push_back({x});
    return from_points(cloud);
}

struct LoadedSpace {
    FiniteMetricSpace space;
    std::string description;
    bool on_real_line = false;
    double span = 0.0;  // max - min of the coordinates when on_real_line
};

LoadedSpace load_space(const ExperimentConfig& cfg) {
    const bool have_points = !cfg.points_path.empty();
    const bool have_distances = !cfg.distances_path.empty();
    if (have_points == have_distances) {
        config_fail("give exactly one of 'points' or 'distances'");
    }
    LoadedSpace out;
    if (have_points) {
        const PointCloud cloud = load_point_cloud(cfg.points_path);
        out.space = from_points(cloud);
        out.description = "points:" + cfg.points_path;
        if (cloud.dim == 1 && !cloud.points.empty()) {
            double lo = cloud.points.front()[0], hi = lo;
            for (const auto& pt : cloud.points) {
                lo = std::min(lo, pt[0]);
                hi = std::max(hi, pt[0]);
            }
            out.on_real_line = true;
            out.span = hi - lo;
        }
    } else {
        out.space = from_distance_matrix(load_distance_matrix(cfg.distances_path));
        out.description = "distances:" + cfg.distances_path;
    }
    return out;
}

struct RowSink {
    CsvTable table;
    std::size_t failed = 0;
    std::string first_failure;

    void push(std::vector<std::string> cells, bool row_failed,
              const std::string& why) {
        if (row_failed && failed++ == 0) {
            first_failure = "row " + std::to_string(table.rows.size() + 1) + ": " + why;
        }
        table.rows.push_back(std::move(cells));
    }
    void push(std::vector<std::string> cells) { push(std::move(cells), false, ""); }
};

RunRecord finish(const ExperimentConfig& cfg, RowSink sink) {
    RunRecord rec;
    rec.config = cfg;
    rec.table = std::move(sink.table);
    rec.failed_rows = sink.failed;
    rec.first_failure = std::move(sink.first_failure);
    return rec;
}

RunRecord build_mag(const ExperimentConfig& cfg) {
    const LoadedSpace in = load_space(cfg);
    RowSink sink;
    sink.table.columns = {"row", "input", "n_points", "magnitude", "error",
                          "verdict"};
    try {
        const double value = magnitude(in.space);
        sink.push({"value", in.description, std::to_string(in.space.size()),
                   format_double(value), "", "pass"});
    } catch (const Error& e) {
        sink.push({"value", in.description, std::to_string(in.space.size()), "",
                   e.what(), "fail"},
                  true, e.what());
    }
    return finish(cfg, sink);
}

RunRecord build_magfun(const ExperimentConfig& cfg) {
    const LoadedSpace in = load_space(cfg);
    if (cfg.ts.empty()) config_fail("magfun needs 'ts'");
    const auto samples = magnitude_function_samples(in.space, cfg.ts);

    RowSink sink;
    sink.table.columns = {"row", "t", "magnitude", "error", "verdict"};
    for (const auto& s : samples) {
        // A failed scale is expected at finitely many t and is recorded, not
        // treated as an assertion failure.
        sink.push({"sample", format_double(s.t),
                   s.ok ? format_double(s.value) : "", s.error,
                   s.ok ? "pass" : "error"});
    }
    return finish(cfg, sink);
}

std::vector<double> default_halving_schedule() {
    std::vector<double> meshes;
    for (int k = 0; k <= 10; ++k) meshes.push_back(std::ldexp(1.0, -k));
    return meshes;
}

RunRecord build_approx(const ExperimentConfig& cfg) {
    IntervalUnion domain;
    std::string description;
    if (!cfg.intervals_path.empty()) {
        if (cfg.has_ab) config_fail("give either 'intervals' or 'a'/'b', not both");
        domain = load_interval_union(cfg.intervals_path);
        description = "intervals:" + cfg.intervals_path;
    } else if (cfg.has_ab) {
        if (!(cfg.a <= cfg.b)) config_fail("'a' must be <= 'b'");
        domain = IntervalUnion::normalized({{cfg.a, cfg.b}});
        description = "[" + format_double(cfg.a) + ", " + format_double(cfg.b) + "]";
    } else {
        config_fail("approx needs 'intervals' or 'a'/'b'");
    }
    if (domain.is_empty()) config_fail("approx domain is empty");

    const std::vector<double> meshes =
        cfg.meshes.empty() ? default_halving_schedule() : cfg.meshes;

    RowSink sink;
    sink.table.columns = {"row",       "input",     "mesh",     "points",
                          "magnitude", "increment", "estimate", "closed_form",
                          "abs_error", "tolerance", "converged", "verdict"};

    const double closed = interval_union_magnitude(domain);
    try {
        const ConvergenceReport report = estimate_compact_magnitude(
            [&domain](double mesh) {
                return real_line_space(uniform_net(domain, mesh));
            },
            meshes, cfg.stop_tol);

        for (std::size_t i = 0; i < report.magnitudes.size(); ++i) {
            const std::string inc =
                i == 0 ? ""
                       : format_double(report.magnitudes[i] - report.magnitudes[i - 1]);
            sink.push({"mesh", description, format_double(report.mesh_sequence[i]),
                       std::to_string(report.net_sizes[i]),
                       format_double(report.magnitudes[i]), inc, "", "", "", "",
                       "", "pass"});
        }
        const double abs_error = std::fabs(report.estimate - closed);
        const bool ok =
            !cfg.has_tol || (report.converged && abs_error <= cfg.tol);
        sink.push({"summary", description, "", "", "", "",
                   format_double(report.estimate), format_double(closed),
                   format_double(abs_error),
                   cfg.has_tol ? format_double(cfg.tol) : "",
                   report.converged ? "true" : "false", verdict(ok)},
                  !ok, "estimate off by " + format_double(abs_error));
    } catch (const Error& e) {
        sink.push({"summary", description, "", "", "", "", "", format_double(closed),
                   "", "", "", "fail"},
                  true, e.what());
    }
    return finish(cfg, sink);
}

RunRecord build_counterexample_halfline(const ExperimentConfig& cfg) {
    if (!(cfg.eps > 0.0) || !(cfg.delta > 0.0)) {
        config_fail("counterexample-halfline needs eps > 0 and delta > 0");
    }
    const CounterexampleReport report = halfline_counterexample(cfg.eps, cfg.delta);
    const double expected =
        static_cast<double>(report.n) * (cfg.delta - std::tanh(cfg.delta)) +
        std::tanh(cfg.delta);

    const bool gap_matches = std::fabs(report.magnitude_gap - expected) <= kGapTol;
    const bool exceeds = report.violates;
    const bool hausdorff_matches =
        std::fabs(report.hausdorff - cfg.delta) <=
        kHausdorffMatchTol * std::max(1.0, cfg.delta);
    const bool ok = gap_matches && exceeds && hausdorff_matches;

    RowSink sink;
    sink.table.columns = {"row",        "epsilon",   "delta",     "n",
                          "set_a",      "set_b",     "hausdorff", "gap",
                          "expected_gap", "tolerance", "verdict"};
    sink.push({"counterexample", format_double(cfg.eps), format_double(cfg.delta),
               std::to_string(report.n), report.set_a, report.set_b,
               format_double(report.hausdorff), format_double(report.magnitude_gap),
               format_double(expected), format_double(kGapTol), verdict(ok)},
              !ok, "gap/hausdorff check failed");
    return finish(cfg, sink);
}

RunRecord build_counterexample_naturals(const ExperimentConfig& cfg) {
    if (!(cfg.c > 0.0)) config_fail("counterexample-naturals needs c > 0");
    const CounterexampleReport report = naturals_counterexample(cfg.c);
    const double expected = static_cast<double>(report.n) *
                            (2.0 * std::tanh(0.5) - std::tanh(1.0));

    const bool gap_matches = std::fabs(report.magnitude_gap - expected) <= kGapTol;
    const bool ok = gap_matches && report.violates && report.hausdorff == 1.0;

    RowSink sink;
    sink.table.columns = {"row", "c",        "n",        "set_a",
                          "set_b", "hausdorff", "gap",    "expected_gap",
                          "threshold", "tolerance", "verdict"};
    sink.push({"counterexample", format_double(cfg.c), std::to_string(report.n),
               report.set_a, report.set_b, format_double(report.hausdorff),
               format_double(report.magnitude_gap), format_double(expected),
               format_double(cfg.c * report.hausdorff), format_double(kGapTol),
               verdict(ok)},
              !ok, "gap/hausdorff check failed");
    return finish(cfg, sink);
}

RunRecord build_onepoint(const ExperimentConfig& cfg) {
    const LoadedSpace in = load_space(cfg);
    if (cfg.ts.empty()) config_fail("onepoint needs 'ts'");
    const OnePointCurve curve = one_point_curve(in.space, cfg.ts);

    RowSink sink;
    sink.table.columns = {"row",   "t",        "magnitude", "deviation",
                          "bound", "tolerance", "verdict"};
    for (const auto& s : curve.samples) {
        const double deviation = s.value - 1.0;
        if (in.on_real_line) {
            // For subsets of the line the deviation obeys the linear bound
            // (t/2)(max - min) at every scale, not only in the limit.
            const double bound = s.t / 2.0 * in.span;
            const bool ok = deviation <= bound + kOnePointBoundTol;
            sink.push({"sample", format_double(s.t), format_double(s.value),
                       format_double(deviation), format_double(bound),
                       format_double(kOnePointBoundTol), verdict(ok)},
                      !ok, "deviation exceeds linear bound");
        } else {
            sink.push({"sample", format_double(s.t), format_double(s.value),
                       format_double(deviation), "", "", "pass"});
        }
    }
    sink.push({"summary", "", "", format_double(curve.final_deviation), "", "",
               "pass"});
    return finish(cfg, sink);
}

RunRecord build_kt_bound(const ExperimentConfig& cfg) {
    const std::vector<double> ts =
        cfg.ts.empty() ? std::vector<double>{0.25, 0.5, 1.0, 2.0} : cfg.ts;
    const std::vector<std::size_t> depths =
        cfg.depths.empty() ? std::vector<std::size_t>{1, 5, 10, 20} : cfg.depths;
    for (std::size_t i = 1; i < depths.size(); ++i) {
        if (!(depths[i] > depths[i - 1])) {
            config_fail("'ns' must be strictly increasing");
        }
    }

    RowSink sink;
    sink.table.columns = {"row", "t",        "n_terms", "magnitude",
                          "bound", "tolerance", "verdict"};
    for (double t : ts) {
        const double bound = std::exp(t / 2.0);
        double prev = 0.0;
        for (std::size_t depth : depths) {
            const double value = magnitude(kt_truncation(t, depth));
            const bool below = value <= bound + kKtBoundTol;
            const bool monotone = value >= prev - kKtMonotoneTol;
            sink.push({"sample", format_double(t), std::to_string(depth),
                       format_double(value), format_double(bound),
                       format_double(kKtBoundTol), verdict(below && monotone)},
                      !(below && monotone),
                      below ? "magnitude decreased in depth" : "bound exceeded");
            prev = value;
        }
    }
    return finish(cfg, sink);
}

void write_outputs(RunRecord& rec) {
    const ExperimentConfig& cfg = rec.config;
    if (cfg.out_dir.empty()) config_fail("output directory not set");
    std::filesystem::create_directories(cfg.out_dir);

    rec.csv_path = (std::filesystem::path(cfg.out_dir) / "results.csv").string();
    std::ofstream out(rec.csv_path, std::ios::binary);
    if (!out) {
        throw Error(Errc::config_error, "cannot write '" + rec.csv_path + "'");
    }
    out << rec.config.echo();
    for (std::size_t i = 0; i < rec.table.columns.size(); ++i) {
        out << (i ? "," : "") << csv_escape(rec.table.columns[i]);
    }
    out << "\n";
    for (const auto& row : rec.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_escape(row[i]);
        }
        out << "\n";
    }
    out.close();

    const ExperimentKind kind = cfg.kind;
    if (kind != ExperimentKind::magfun && kind != ExperimentKind::onepoint &&
        kind != ExperimentKind::approx) {
        return;
    }

    ChartSpec chart;
    Series series;
    auto col = [&rec](const char* name) {
        const auto it = std::find(rec.table.columns.begin(),
                                  rec.table.columns.end(), name);
        return static_cast<std::size_t>(it - rec.table.columns.begin());
    };
    if (kind == ExperimentKind::approx) {
        chart.title = "net magnitude vs mesh";
        chart.x_label = "mesh";
        chart.y_label = "magnitude";
        chart.log_x = true;
        const std::size_t xi = col("mesh"), yi = col("magnitude"), ri = col("row");
        for (const auto& row : rec.table.rows) {
            if (row[ri] != "mesh") continue;
            series.x.push_back(std::strtod(row[xi].c_str(), nullptr));
            series.y.push_back(std::strtod(row[yi].c_str(), nullptr));
        }
        series.label = "net magnitude";
    } else {
        chart.title = kind == ExperimentKind::magfun ? "magnitude function"
                                                     : "one-point curve";
        chart.x_label = "t";
        chart.y_label = "magnitude";
        const std::size_t xi = col("t"), yi = col("magnitude"), ri = col("row");
        bool all_positive = true;
        for (const auto& row : rec.table.rows) {
            if (row[ri] != "sample" || row[yi].empty()) continue;
            const double x = std::strtod(row[xi].c_str(), nullptr);
            series.x.push_back(x);
            series.y.push_back(std::strtod(row[yi].c_str(), nullptr));
            if (!(x > 0.0)) all_positive = false;
        }
        chart.log_x = all_positive;
        series.label = "mg(tM)";
    }
    chart.series.push_back(std::move(series));
    rec.svg_path = (std::filesystem::path(cfg.out_dir) / "plot.svg").string();
    write_line_chart(rec.svg_path, chart);
}

}  // namespace

const char* experiment_kind_name(ExperimentKind kind) noexcept {
    switch (kind) {
        case ExperimentKind::mag: return "mag";
        case ExperimentKind::magfun: return "magfun";
        case ExperimentKind::approx: return "approx";
        case ExperimentKind::lipschitz_scan: return "lipschitz-scan";
        case ExperimentKind::counterexample_halfline:
            return "counterexample-halfline";
        case ExperimentKind::counterexample_naturals:
            return "counterexample-naturals";
        case ExperimentKind::onepoint: return "onepoint";
        case ExperimentKind::kt_bound: return "kt-bound";
    }
    return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
    for (ExperimentKind kind :
         {ExperimentKind::mag, ExperimentKind::magfun, ExperimentKind::approx,
          ExperimentKind::lipschitz_scan, ExperimentKind::counterexample_halfline,
          ExperimentKind::counterexample_naturals, ExperimentKind::onepoint,
          ExperimentKind::kt_bound}) {
        if (name == experiment_kind_name(kind)) return kind;
    }
    config_fail("unknown experiment kind '" + name + "'");
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

ExperimentConfig ExperimentConfig::parse(std::istream& in,
                                         const std::string& source) {
    std::map<std::string, std::string> kv;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        const auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            config_fail(source + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
        }
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            config_fail(source + ":" + std::to_string(lineno) +
                        ": empty key or value");
        }
        if (!kv.emplace(key, value).second) {
            config_fail(source + ":" + std::to_string(lineno) +
                        ": duplicate key '" + key + "'");
        }
    }

    const auto kind_it = kv.find("kind");
    if (kind_it == kv.end()) config_fail(source + ": missing 'kind'");

    ExperimentConfig cfg;
    cfg.kind = parse_experiment_kind(kind_it->second);
    kv.erase(kind_it);

    static const std::map<ExperimentKind, std::set<std::string>> allowed = {
        {ExperimentKind::mag, {"points", "distances"}},
        {ExperimentKind::magfun, {"points", "distances", "ts"}},
        {ExperimentKind::approx,
         {"intervals", "a", "b", "meshes", "stop_tol", "tol"}},
        {ExperimentKind::lipschitz_scan, {"a", "b", "trials"}},
        {ExperimentKind::counterexample_halfline, {"eps", "delta"}},
        {ExperimentKind::counterexample_naturals, {"c"}},
        {ExperimentKind::onepoint, {"points", "distances", "ts"}},
        {ExperimentKind::kt_bound, {"ts", "ns"}},
    };
    const std::set<std::string> common = {"seed", "out"};
    const auto& kind_keys = allowed.at(cfg.kind);

    bool saw_a = false, saw_b = false;
    for (const auto& [key, value] : kv) {
        if (!common.count(key) && !kind_keys.count(key)) {
            config_fail(source + ": key '" + key + "' is not valid for kind '" +
                        std::string(experiment_kind_name(cfg.kind)) + "'");
        }
        if (key == "points") cfg.points_path = value;
        else if (key == "distances") cfg.distances_path = value;
        else if (key == "intervals") cfg.intervals_path = value;
        else if (key == "ts") cfg.ts = parse_number_list(value, key);
        else if (key == "meshes") cfg.meshes = parse_number_list(value, key);
        else if (key == "ns") cfg.depths = parse_count_list(value, key);
        else if (key == "stop_tol") cfg.stop_tol = parse_number(value, key);
        else if (key == "tol") { cfg.tol = parse_number(value, key); cfg.has_tol = true; }
        else if (key == "eps") cfg.eps = parse_number(value, key);
        else if (key == "delta") cfg.delta = parse_number(value, key);
        else if (key == "c") cfg.c = parse_number(value, key);
        else if (key == "a") { cfg.a = parse_number(value, key); saw_a = true; }
        else if (key == "b") { cfg.b = parse_number(value, key); saw_b = true; }
        else if (key == "trials") {
            const double v = parse_number(value, key);
            if (!(v >= 1.0) || v != std::floor(v)) {
                config_fail("'trials' needs a positive integer");
            }
            cfg.trials = static_cast<std::size_t>(v);
        } else if (key == "seed") {
            std::uint64_t s = 0;
            auto [ptr, ec] =
                std::from_chars(value.data(), value.data() + value.size(), s);
            if (ec != std::errc{} || ptr != value.data() + value.size()) {
                config_fail("'seed' needs an unsigned integer");
            }
            cfg.seed = s;
        } else if (key == "out") {
            cfg.out_dir = value;
        }
    }
    if (saw_a != saw_b) config_fail("'a' and 'b' must be given together");
    cfg.has_ab = saw_a && saw_b;
    return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::config_error, "cannot open config '" + path + "'");
    }
    return parse(in, path);
}

std::string ExperimentConfig::echo() const {
    std::vector<std::pair<std::string, std::string>> items;
    items.emplace_back("kind", experiment_kind_name(kind));
    if (!points_path.empty()) items.emplace_back("points", points_path);
    if (!distances_path.empty()) items.emplace_back("distances", distances_path);
    if (!intervals_path.empty()) items.emplace_back("intervals", intervals_path);
    if (!ts.empty()) items.emplace_back("ts", join_list(ts));
    if (!meshes.empty()) items.emplace_back("meshes", join_list(meshes));
    if (!depths.empty()) items.emplace_back("ns", join_counts(depths));
    if (kind == ExperimentKind::approx) {
        items.emplace_back("stop_tol", format_double(stop_tol));
        if (has_tol) items.emplace_back("tol", format_double(tol));
    }
    if (kind == ExperimentKind::counterexample_halfline) {
        items.emplace_back("eps", format_double(eps));
        items.emplace_back("delta", format_double(delta));
    }
    if (kind == ExperimentKind::counterexample_naturals) {
        items.emplace_back("c", format_double(c));
    }
    if (has_ab) {
        items.emplace_back("a", format_double(a));
        items.emplace_back("b", format_double(b));
    }
    if (trials) items.emplace_back("trials", std::to_string(trials));
    if (kind == ExperimentKind::lipschitz_scan) {
        items.emplace_back("seed", std::to_string(seed));
    }

    std::string out;
    for (const auto& [key, value] : items) {
        out += "# " + key + " = " + value + "\n";
    }
    return out;
}

RunRecord lipschitz_scan(double a, double b, std::size_t trials,
                         std::uint64_t seed) {
    if (!(a < b)) {
        throw Error(Errc::degenerate_interval, "scan needs a < b");
    }
    if (trials < 1) {
        throw Error(Errc::invalid_argument, "scan needs at least one trial");
    }

    const double coefficient = lipschitz_coefficient(a, b);
    Rng rng(seed);

    RowSink sink;
    sink.table.columns = {"row",   "trial", "size_a",      "size_b",
                          "d_h",   "mag_a", "mag_b",       "ratio",
                          "coefficient", "tolerance", "verdict", "set_a", "set_b"};

    double max_ratio = -1.0;
    std::vector<double> max_a, max_b;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const RealFiniteSet set_a = random_subset(rng, a, b);
        const RealFiniteSet set_b = random_subset(rng, a, b);
        const double d_h = hausdorff_real(IntervalUnion::from_point_set(set_a),
                                          IntervalUnion::from_point_set(set_b));
        const double mag_a = real_finite_magnitude(set_a);
        const double mag_b = real_finite_magnitude(set_b);

        if (d_h == 0.0) {
            sink.push({"trial", std::to_string(trial), std::to_string(set_a.size()),
                       std::to_string(set_b.size()), "0", format_double(mag_a),
                       format_double(mag_b), "", format_double(coefficient),
                       format_double(kScanRatioTol), "skip", "", ""});
            continue;
        }
        const double ratio = std::fabs(mag_a - mag_b) / d_h;
        const bool ok = ratio <= coefficient + kScanRatioTol;
        sink.push({"trial", std::to_string(trial), std::to_string(set_a.size()),
                   std::to_string(set_b.size()), format_double(d_h),
                   format_double(mag_a), format_double(mag_b),
                   format_double(ratio), format_double(coefficient),
                   format_double(kScanRatioTol), verdict(ok), "", ""},
                  !ok, "ratio " + format_double(ratio) + " exceeds coefficient");
        if (ratio > max_ratio) {
            max_ratio = ratio;
            max_a = set_a.points();
            max_b = set_b.points();
        }
    }

    if (max_ratio >= 0.0) {
        const bool ok = max_ratio <= coefficient + kScanRatioTol;
        sink.push({"max", "", std::to_string(max_a.size()),
                   std::to_string(max_b.size()), "", "", "",
                   format_double(max_ratio), format_double(coefficient),
                   format_double(kScanRatioTol), verdict(ok), join_points(max_a),
                   join_points(max_b)},
                  !ok, "max ratio exceeds coefficient");
    }

    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::lipschitz_scan;
    cfg.a = a;
    cfg.b = b;
    cfg.has_ab = true;
    cfg.trials = trials;
    cfg.seed = seed;
    return finish(cfg, sink);
}

RunRecord run(const ExperimentConfig& config) {
    const auto start = std::chrono::steady_clock::now();

    RunRecord rec;
    switch (config.kind) {
        case ExperimentKind::mag: rec = build_mag(config); break;
        case ExperimentKind::magfun: rec = build_magfun(config); break;
        case ExperimentKind::approx: rec = build_approx(config); break;
        case ExperimentKind::lipschitz_scan: {
            if (!config.has_ab) config_fail("lipschitz-scan needs 'a' and 'b'");
            if (config.trials < 1) config_fail("lipschitz-scan needs 'trials'");
            rec = lipschitz_scan(config.a, config.b, config.trials, config.seed);
            rec.config = config;
            break;
        }
        case ExperimentKind::counterexample_halfline:
            rec = build_counterexample_halfline(config);
            break;
        case ExperimentKind::counterexample_naturals:
            rec = build_counterexample_naturals(config);
            break;
        case ExperimentKind::onepoint: rec = build_onepoint(config); break;
        case ExperimentKind::kt_bound: rec = build_kt_bound(config); break;
    }

    write_outputs(rec);
    rec.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return rec;
}

}  // namespace maglab
