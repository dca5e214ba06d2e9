#pragma once

#include <functional>
#include <string>
#include <vector>

#include "smlab/cocycle.hpp"
#include "smlab/experiments/config.hpp"
#include "smlab/spectral.hpp"

namespace smlab {

// Deterministic parallel map over [0, count): every index is computed exactly
// once, results land in index order regardless of scheduling.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

std::vector<double> energy_grid(const ExperimentConfig& cfg);

// L_N(E) over the config's energy grid. Pure function of config physics
// (threads only affect wall time).
std::vector<LyapunovEstimate> run_sweep(const ExperimentConfig& cfg);

std::string sweep_csv(const std::vector<LyapunovEstimate>& rows, const ExperimentConfig& cfg);

struct RecurrenceRow {
    int point_index = 0;
    TorusPoint start;
    RecurrenceEvent event;
    double omega_defect = 0.0;
};

// Per starting point: all near-recurrences and the omega-limit witness
// defects at window half-width K.
std::vector<RecurrenceRow> run_recurrence(const ExperimentConfig& cfg);
std::string recurrence_csv(const std::vector<RecurrenceRow>& rows, const ExperimentConfig& cfg);

struct GreenRow {
    double energy = 0.0;
    int site = 0;
    double re_g = 0.0;
    double im_g = 0.0;
};

struct GreenRun {
    std::vector<GreenRow> rows;
    DefectReport report;
};

// Reflectionless defect scan of a dynamically sampled window (or the free
// window when phi is identically zero).
GreenRun run_green(const ExperimentConfig& cfg);
std::string green_csv(const GreenRun& run, const ExperimentConfig& cfg);

// Writes csv_text to cfg.out plus a "<out>.manifest" with the config echo,
// artifact version, wall clock and an FNV-1a checksum of the output bytes.
void write_output_with_manifest(const std::string& csv_text, const ExperimentConfig& cfg,
                                const std::string& command, double wall_seconds);

// Render a sweep CSV (columns E, mean, stderr) to an SVG plot.
std::string plot_sweep_csv(const std::string& csv_path, const std::string& title);

}  // namespace smlab
