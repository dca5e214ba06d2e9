// smlab - sweeps, recurrence scans, Green's function defects and the oracle
// validation suite for Schrodinger cocycles driven by the standard map.
#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "smlab/experiments/runners.hpp"
#include "smlab/experiments/svg.hpp"
#include "smlab/experiments/validate.hpp"
#include "smlab/version.hpp"

namespace {

struct CliOverrides {
    std::string config_path;
    // CLI11 fills these only when the flag is present; applied over the file.
    std::vector<std::pair<std::string, std::string>> assignments;
};

void add_common_flags(CLI::App* cmd, CliOverrides& ov) {
    cmd->add_option("--config", ov.config_path, "key=value config file");
    auto capture = [&ov](const std::string& key) {
        return [&ov, key](const std::string& value) { ov.assignments.emplace_back(key, value); };
    };
    cmd->add_option_function<std::string>("--seed", capture("seed"), "RNG seed (u64)");
    cmd->add_option_function<std::string>("--out", capture("out"), "output path");
    cmd->add_option_function<std::string>("--map", capture("map"), "standard | rotation");
    cmd->add_option_function<std::string>("--lambda", capture("lambda"), "standard map coupling");
    cmd->add_option_function<std::string>("--alpha", capture("alpha"), "rotation number");
    cmd->add_option_function<std::string>("--emin", capture("emin"), "energy grid lower edge");
    cmd->add_option_function<std::string>("--emax", capture("emax"), "energy grid upper edge");
    cmd->add_option_function<std::string>("--egrid", capture("egrid"), "energy grid size");
    cmd->add_option_function<std::string>("--N", capture("N"), "cocycle length");
    cmd->add_option_function<std::string>("--samples", capture("samples"), "Monte Carlo samples");
    cmd->add_option_function<std::string>("--epsilon", capture("epsilon"),
                                          "imaginary offset for Green's functions");
    cmd->add_option_function<std::string>("--sites", capture("sites"), "finite-section size");
    cmd->add_option_function<std::string>("--center-width", capture("center_width"),
                                          "defect center window");
    cmd->add_option_function<std::string>("--K", capture("K"), "omega-limit half width");
    cmd->add_option_function<std::string>("--delta", capture("delta"), "recurrence threshold");
    cmd->add_option_function<std::string>("--horizon", capture("horizon"), "recurrence horizon");
    cmd->add_option_function<std::string>("--points", capture("points"),
                                          "number of starting points");
    cmd->add_option_function<std::string>("--threads", capture("threads"),
                                          "worker threads (0 = hardware)");
    cmd->add_option_function<std::string>("--svg", capture("svg"), "also render an SVG plot");
    cmd->add_option_function<std::string>("--phi-c0", capture("phi_c0"), "phi offset");
    cmd->add_option_function<std::string>("--phi-cos-x", capture("phi_cos_x"), "phi cos(2 pi x)");
    cmd->add_option_function<std::string>("--phi-sin-x", capture("phi_sin_x"), "phi sin(2 pi x)");
    cmd->add_option_function<std::string>("--phi-cos-y", capture("phi_cos_y"), "phi cos(2 pi y)");
    cmd->add_option_function<std::string>("--phi-sin-y", capture("phi_sin_y"), "phi sin(2 pi y)");
}

smlab::ExperimentConfig build_config(const CliOverrides& ov) {
    smlab::ExperimentConfig cfg;
    if (!ov.config_path.empty()) cfg = smlab::ExperimentConfig::from_file(ov.config_path);
    for (const auto& [key, value] : ov.assignments) cfg.set_field(key, value);
    cfg.validate();
    return cfg;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for standard-map Schrodinger cocycles"};
    app.set_version_flag("--version", smlab::kVersion);
    app.require_subcommand(1);

    CliOverrides sweep_ov, recur_ov, green_ov, validate_ov, plot_ov;

    CLI::App* sweep = app.add_subcommand("sweep", "mean Lyapunov exponent over an energy grid");
    add_common_flags(sweep, sweep_ov);

    CLI::App* validate = app.add_subcommand("validate", "run the oracle suite");
    add_common_flags(validate, validate_ov);

    CLI::App* recur = app.add_subcommand("recur", "near-recurrences and omega-limit defects");
    add_common_flags(recur, recur_ov);

    CLI::App* green = app.add_subcommand("green", "reflectionless defect of a sampled window");
    add_common_flags(green, green_ov);

    CLI::App* plot = app.add_subcommand("plot", "render a sweep CSV as SVG");
    std::string plot_in, plot_out, plot_title = "mean Lyapunov exponent";
    plot->add_option("--in", plot_in, "sweep CSV")->required();
    plot->add_option("--out", plot_out, "SVG path")->required();
    plot->add_option("--title", plot_title, "plot title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) {
            auto cfg = build_config(sweep_ov);
            if (cfg.out.empty()) throw smlab::ConfigError("out", "sweep needs --out");
            auto t0 = std::chrono::steady_clock::now();
            auto rows = smlab::run_sweep(cfg);
            std::string csv = smlab::sweep_csv(rows, cfg);
            smlab::write_output_with_manifest(csv, cfg, "sweep", seconds_since(t0));
            if (!cfg.svg_out.empty()) {
                smlab::write_svg(cfg.svg_out,
                                 smlab::plot_sweep_csv(cfg.out, "mean Lyapunov exponent"));
            }
            std::printf("wrote %s (%zu rows)\n", cfg.out.c_str(), rows.size());
        } else if (recur->parsed()) {
            auto cfg = build_config(recur_ov);
            if (cfg.out.empty()) throw smlab::ConfigError("out", "recur needs --out");
            auto t0 = std::chrono::steady_clock::now();
            auto rows = smlab::run_recurrence(cfg);
            smlab::write_output_with_manifest(smlab::recurrence_csv(rows, cfg), cfg, "recur",
                                              seconds_since(t0));
            std::printf("wrote %s (%zu rows)\n", cfg.out.c_str(), rows.size());
        } else if (green->parsed()) {
            auto cfg = build_config(green_ov);
            if (cfg.out.empty()) throw smlab::ConfigError("out", "green needs --out");
            auto t0 = std::chrono::steady_clock::now();
            auto run = smlab::run_green(cfg);
            smlab::write_output_with_manifest(smlab::green_csv(run, cfg), cfg, "green",
                                              seconds_since(t0));
            std::printf("wrote %s (defect_max=%.6g)\n", cfg.out.c_str(), run.report.defect);
        } else if (validate->parsed()) {
            auto cfg = build_config(validate_ov);
            auto results = smlab::run_validation_suite({}, {}, cfg.threads);
            int failures = smlab::print_validation_report(results);
            return failures == 0 ? 0 : 1;
        } else if (plot->parsed()) {
            smlab::write_svg(plot_out, smlab::plot_sweep_csv(plot_in, plot_title));
            std::printf("wrote %s\n", plot_out.c_str());
        }
    } catch (const smlab::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
