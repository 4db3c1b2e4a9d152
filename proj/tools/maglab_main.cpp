#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maglab/errors.hpp"
#include "maglab/experiments.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitBadInput = 2;

struct CliOptions {
    std::string config_path;
    std::string out_dir;
    std::string points_path;
    std::string distances_path;
    bool seed_given = false;
    std::uint64_t seed = 0;
    bool quiet = false;
};

std::string default_out_dir() {
    if (const char* env = std::getenv("MAGLAB_OUT"); env && *env) return env;
    return ".";
}

int run_kind(maglab::ExperimentKind kind, const CliOptions& opts) {
    maglab::ExperimentConfig config;
    if (!opts.config_path.empty()) {
        if (!opts.points_path.empty() || !opts.distances_path.empty()) {
            throw maglab::Error(maglab::Errc::config_error,
                                "--config cannot be combined with --points or "
                                "--distances");
        }
        config = maglab::ExperimentConfig::parse_file(opts.config_path);
        if (config.kind != kind) {
            throw maglab::Error(maglab::Errc::config_error,
                                "config kind '" +
                                    std::string(experiment_kind_name(config.kind)) +
                                    "' does not match subcommand");
        }
    } else if (kind == maglab::ExperimentKind::mag &&
               (!opts.points_path.empty() || !opts.distances_path.empty())) {
        config.kind = kind;
        config.points_path = opts.points_path;
        config.distances_path = opts.distances_path;
    } else {
        throw maglab::Error(maglab::Errc::config_error,
                            "--config is required for this subcommand");
    }

    if (opts.seed_given) config.seed = opts.seed;
    if (!opts.out_dir.empty()) {
        config.out_dir = opts.out_dir;
    } else if (config.out_dir.empty()) {
        config.out_dir = default_out_dir();
    }

    const maglab::RunRecord record = maglab::run(config);
    if (!opts.quiet) {
        std::cout << experiment_kind_name(kind) << ": " << record.table.rows.size()
                  << " rows in " << record.duration_seconds << " s -> "
                  << record.csv_path << "\n";
        if (!record.svg_path.empty()) {
            std::cout << "plot -> " << record.svg_path << "\n";
        }
    }
    if (!record.all_passed()) {
        std::cerr << "FAILED (" << record.failed_rows
                  << " rows): " << record.first_failure << "\n";
        return kExitAssertionFailed;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"magnitude experiments for finite metric spaces and subsets "
                 "of the real line"};
    app.require_subcommand(1);

    const std::vector<maglab::ExperimentKind> kinds = {
        maglab::ExperimentKind::mag,
        maglab::ExperimentKind::magfun,
        maglab::ExperimentKind::approx,
        maglab::ExperimentKind::lipschitz_scan,
        maglab::ExperimentKind::counterexample_halfline,
        maglab::ExperimentKind::counterexample_naturals,
        maglab::ExperimentKind::onepoint,
        maglab::ExperimentKind::kt_bound,
    };

    std::vector<CliOptions> options(kinds.size());
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        auto* sub = app.add_subcommand(experiment_kind_name(kinds[i]),
                                       "run a " +
                                           std::string(experiment_kind_name(kinds[i])) +
                                           " experiment");
        CliOptions& opt = options[i];
        sub->add_option("--config", opt.config_path, "experiment config file");
        sub->add_option("--out", opt.out_dir,
                        "output directory (default $MAGLAB_OUT or .)");
        sub->add_option("--seed", opt.seed, "override the RNG seed")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--quiet", opt.quiet, "suppress progress lines");
        if (kinds[i] == maglab::ExperimentKind::mag) {
            sub->add_option("--points", opt.points_path,
                            "point-cloud file (shortcut, no config needed)");
            sub->add_option("--distances", opt.distances_path,
                            "distance-matrix file (shortcut, no config needed)");
        }
    }

    CLI11_PARSE(app, argc, argv);

    for (std::size_t i = 0; i < kinds.size(); ++i) {
        auto* sub = app.get_subcommand(experiment_kind_name(kinds[i]));
        if (!sub->parsed()) continue;
        options[i].seed_given = sub->count("--seed") > 0;
        try {
            return run_kind(kinds[i], options[i]);
        } catch (const maglab::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadInput;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadInput;
        }
    }
    return kExitBadInput;
}
