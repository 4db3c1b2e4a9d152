#ifndef MAGLAB_EXPERIMENTS_HPP
#define MAGLAB_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace maglab {

enum class ExperimentKind {
    mag,
    magfun,
    approx,
    lipschitz_scan,
    counterexample_halfline,
    counterexample_naturals,
    onepoint,
    kt_bound,
};

const char* experiment_kind_name(ExperimentKind kind) noexcept;
ExperimentKind parse_experiment_kind(const std::string& name);

/// Declarative description of one experiment run, read from a flat
/// `key = value` config file. Unknown keys and keys foreign to the kind are
/// rejected.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::mag;

    std::string points_path;
    std::string distances_path;
    std::string intervals_path;

    std::vector<double> ts;      // scale grid (magfun ascending, onepoint
                                 // descending, kt-bound scale values)
    std::vector<double> meshes;  // approx refinement schedule
    std::vector<std::size_t> depths;  // kt-bound truncation depths

    double stop_tol = 1e-6;
    double tol = 0.0;  // approx estimate-vs-closed-form assertion tolerance
    bool has_tol = false;

    double eps = 0.0;
    double delta = 0.0;
    double c = 0.0;
    double a = 0.0;
    double b = 0.0;
    bool has_ab = false;

    std::size_t trials = 0;
    std::uint64_t seed = 0;

    std::string out_dir;

    static ExperimentConfig parse_file(const std::string& path);
    static ExperimentConfig parse(std::istream& in, const std::string& source);

    /// Canonical `key = value` echo of everything except the output dir,
    /// used as the comment banner of results.csv.
    std::string echo() const;
};

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct RunRecord {
    ExperimentConfig config;
    CsvTable table;
    std::size_t failed_rows = 0;
    std::string first_failure;
    double duration_seconds = 0.0;
    std::string csv_path;
    std::string svg_path;

    bool all_passed() const noexcept { return failed_rows == 0; }
};

/// Round-trip-exact decimal rendering of a double (shortest form that
/// parses back to the same value).
std::string format_double(double v);

/// Executes the configured experiment, writes `results.csv` (and `plot.svg`
/// for magfun/onepoint/approx) under config.out_dir, and reports per-row
/// verdicts. Throws Errc::config_error / Errc::input_parse_error before any
/// output is written; assertion failures are reported in the record, not
/// thrown.
RunRecord run(const ExperimentConfig& config);

/// Random-pair Lipschitz ratio scan over finite subsets of [a, b]: checks
/// max |mg(A) - mg(B)| / d_H(A, B) against 1 + (b - a)/2. Builds the table
/// only; run() adds the file output.
RunRecord lipschitz_scan(double a, double b, std::size_t trials,
                         std::uint64_t seed);

}  // namespace maglab

#endif  // MAGLAB_EXPERIMENTS_HPP
