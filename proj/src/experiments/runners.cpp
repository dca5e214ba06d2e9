#include "smlab/experiments/runners.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "smlab/experiments/csv.hpp"
#include "smlab/experiments/svg.hpp"
#include "smlab/rng.hpp"
#include "smlab/version.hpp"

namespace smlab {

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw > 0 ? static_cast<int>(hw) : 1;
    }
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<double> energy_grid(const ExperimentConfig& cfg) {
    std::vector<double> grid(static_cast<std::size_t>(cfg.e_count));
    if (cfg.e_count == 1) {
        grid[0] = cfg.e_min;
        return grid;
    }
    double step = (cfg.e_max - cfg.e_min) / (cfg.e_count - 1);
    for (int i = 0; i < cfg.e_count; ++i) grid[static_cast<std::size_t>(i)] = cfg.e_min + i * step;
    return grid;
}

std::vector<LyapunovEstimate> run_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.samples < 2) throw ConfigError("samples", "sweep needs >= 2 for a standard error");
    const std::vector<double> grid = energy_grid(cfg);
    const MapSpec m = cfg.map_spec();
    const SamplingFunction phi = cfg.phi();

    std::vector<LyapunovEstimate> rows(grid.size());
    parallel_for(static_cast<int>(grid.size()), cfg.threads, [&](int i) {
        rows[static_cast<std::size_t>(i)] = mean_lyapunov(
            grid[static_cast<std::size_t>(i)], cfg.n_steps, m, phi, cfg.samples, cfg.seed);
    });
    return rows;
}

namespace {

void echo_config(CsvWriter& w, const ExperimentConfig& cfg, const std::string& command) {
    w.comment("smlab " + std::string(kVersion) + " " + command);
    for (const std::string& line : cfg.echo_lines()) w.comment(line);
}

}  // namespace

std::string sweep_csv(const std::vector<LyapunovEstimate>& rows, const ExperimentConfig& cfg) {
    CsvWriter w;
    echo_config(w, cfg, "sweep");
    w.header({"E", "mean", "stderr", "N", "samples", "lambda", "seed"});
    double map_param = cfg.map == MapKind::standard_map ? cfg.lambda : cfg.alpha;
    for (const LyapunovEstimate& r : rows) {
        w.row({format_double(r.energy), format_double(r.mean), format_double(r.std_error),
               std::to_string(r.n_steps), std::to_string(r.samples), format_double(map_param),
               std::to_string(r.seed)});
    }
    return w.text();
}

std::vector<RecurrenceRow> run_recurrence(const ExperimentConfig& cfg) {
    cfg.validate();
    const MapSpec m = cfg.map_spec();
    const SamplingFunction phi = cfg.phi();

    std::vector<std::vector<RecurrenceRow>> per_point(static_cast<std::size_t>(cfg.points));
    parallel_for(cfg.points, cfg.threads, [&](int i) {
        SplitMix64 rng = sample_stream(cfg.seed, static_cast<std::uint64_t>(i));
        TorusPoint x0{rng.uniform01(), rng.uniform01()};
        auto events = near_recurrences(x0, m, cfg.delta, cfg.horizon);
        std::vector<RecurrenceRow> rows;
        if (!events.empty()) {
            OmegaWitness witness = omega_limit_witness(x0, m, phi, events, cfg.half_width);
            rows.reserve(events.size());
            for (std::size_t j = 0; j < events.size(); ++j)
                rows.push_back(RecurrenceRow{i, x0, events[j], witness.defects[j]});
        }
        per_point[static_cast<std::size_t>(i)] = std::move(rows);
    });

    std::vector<RecurrenceRow> rows;
    for (auto& chunk : per_point)
        rows.insert(rows.end(), chunk.begin(), chunk.end());
    return rows;
}

std::string recurrence_csv(const std::vector<RecurrenceRow>& rows, const ExperimentConfig& cfg) {
    CsvWriter w;
    echo_config(w, cfg, "recur");
    w.comment("metric_tail_bound=" +
              format_double(metric_tail_bound(cfg.phi().sup_bound(), cfg.half_width)));
    w.header({"point", "x0", "y0", "n", "distance", "omega_defect"});
    for (const RecurrenceRow& r : rows) {
        w.row({std::to_string(r.point_index), format_double(r.start.x), format_double(r.start.y),
               std::to_string(r.event.n), format_double(r.event.distance),
               format_double(r.omega_defect)});
    }
    return w.text();
}

GreenRun run_green(const ExperimentConfig& cfg) {
    cfg.validate();
    const MapSpec m = cfg.map_spec();
    const SamplingFunction phi = cfg.phi();

    SplitMix64 rng = sample_stream(cfg.seed, 0);
    TorusPoint x0{rng.uniform01(), rng.uniform01()};
    int half = (cfg.sites - 1) / 2;
    PotentialWindow v = sample_potential(x0, m, phi, -half, cfg.sites - 1 - half);

    GreenRun run;
    run.report = reflectionless_defect(v, energy_grid(cfg), cfg.epsilon, cfg.center_width);

    JacobiWindow h = finite_section(v);
    const int offset = (h.size() - cfg.center_width) / 2;
    for (double t : energy_grid(cfg)) {
        auto g = green_diagonal_all(h, ComplexEnergy{t, cfg.epsilon}, GreenBoundary::open_free);
        for (int i = 0; i < cfg.center_width; ++i) {
            const auto& gi = g[static_cast<std::size_t>(offset + i)];
            run.rows.push_back(GreenRow{t, h.n_from + offset + i, gi.real(), gi.imag()});
        }
    }
    return run;
}

std::string green_csv(const GreenRun& run, const ExperimentConfig& cfg) {
    CsvWriter w;
    echo_config(w, cfg, "green");
    w.comment("boundary=open_free");
    w.comment("center_sites=[" + std::to_string(run.report.center_from) + "," +
              std::to_string(run.report.center_to) + "]");
    w.comment("defect_max=" + format_double(run.report.defect));
    w.header({"t", "site", "re_g", "im_g", "abs_re_g"});
    for (const GreenRow& r : run.rows) {
        w.row({format_double(r.energy), std::to_string(r.site), format_double(r.re_g),
               format_double(r.im_g), format_double(std::abs(r.re_g))});
    }
    return w.text();
}

void write_output_with_manifest(const std::string& csv_text, const ExperimentConfig& cfg,
                                const std::string& command, double wall_seconds) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + cfg.out + "'");
    f << csv_text;
    if (!f) throw std::runtime_error("write failed for '" + cfg.out + "'");
    f.close();

    char checksum[32];
    std::snprintf(checksum, sizeof(checksum), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(csv_text)));

    std::ofstream mf(cfg.out + ".manifest", std::ios::binary);
    if (!mf) throw std::runtime_error("cannot open manifest for '" + cfg.out + "'");
    mf << "version=" << kVersion << "\n";
    mf << "command=" << command << "\n";
    for (const std::string& line : cfg.echo_lines()) mf << line << "\n";
    mf << "wall_seconds=" << format_double(wall_seconds) << "\n";
    mf << "output=" << cfg.out << "\n";
    mf << "fnv1a64=" << checksum << "\n";
}

std::string plot_sweep_csv(const std::string& csv_path, const std::string& title) {
    CsvTable table = read_csv(csv_path);
    int ei = table.column_index("E");
    int mi = table.column_index("mean");
    int si = table.column_index("stderr");
    if (ei < 0 || mi < 0)
        throw std::runtime_error("plot: csv must have columns E and mean");

    PlotSeries series;
    for (const auto& row : table.rows) {
        series.x.push_back(std::stod(row[static_cast<std::size_t>(ei)]));
        series.y.push_back(std::stod(row[static_cast<std::size_t>(mi)]));
        if (si >= 0) series.band.push_back(2.0 * std::stod(row[static_cast<std::size_t>(si)]));
    }
    if (si < 0) series.band.clear();
    return render_line_plot(series, title, "E", "mean Lyapunov exponent");
}

}  // namespace smlab
