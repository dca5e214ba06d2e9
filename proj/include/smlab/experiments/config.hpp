#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "smlab/potential.hpp"

namespace smlab {

// Config error carrying the offending field name (CLI maps these to exit 2).
struct ConfigError : std::runtime_error {
    std::string field;
    ConfigError(std::string field_, const std::string& what_)
        : std::runtime_error(field_ + ": " + what_), field(std::move(field_)) {}
};

// Flat key=value experiment description. File values first, CLI flags win.
struct ExperimentConfig {
    MapKind map = MapKind::standard_map;
    double lambda = 7.0;
    double alpha = 0.618034;

    // phi coefficients; defaults to cos 2pi x
    double phi_c0 = 0.0;
    double phi_cos_x = 1.0;
    double phi_sin_x = 0.0;
    double phi_cos_y = 0.0;
    double phi_sin_y = 0.0;

    double e_min = -5.0;
    double e_max = 5.0;
    int e_count = 101;

    long n_steps = 10000;
    int samples = 64;
    std::uint64_t seed = 1;

    double epsilon = 1e-3;   // imaginary offset for Green's functions
    int sites = 801;         // finite-section window size
    int center_width = 21;   // sites entering the reflectionless defect

    int half_width = 8;      // K: omega-limit windows live on [-K, K]
    double delta = 0.05;     // recurrence threshold
    long horizon = 100000;   // recurrence scan length
    int points = 4;          // starting points for recurrence runs

    int threads = 0;         // 0 = hardware; execution detail, never echoed
    std::string out;
    std::string svg_out;     // optional plot next to a sweep

    MapSpec map_spec() const;
    SamplingFunction phi() const;

    // Throws ConfigError naming the first invalid field.
    void validate() const;

    // key=value lines, fixed order, 17 significant digits; what CSV prologues
    // echo and what re-running needs. Excludes out/threads on purpose.
    std::vector<std::string> echo_lines() const;

    // Parse "key=value" text ('#' comments, blank lines ok).
    static ExperimentConfig from_file(const std::string& path);
    void set_field(const std::string& key, const std::string& value);
};

}  // namespace smlab
