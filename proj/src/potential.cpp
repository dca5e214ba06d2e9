#include "smlab/potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double SamplingFunction::operator()(const TorusPoint& p) const {
    double v = offset;
    if (cos_x != 0.0) v += cos_x * std::cos(kTwoPi * p.x);
    if (sin_x != 0.0) v += sin_x * std::sin(kTwoPi * p.x);
    if (cos_y != 0.0) v += cos_y * std::cos(kTwoPi * p.y);
    if (sin_y != 0.0) v += sin_y * std::sin(kTwoPi * p.y);
    return v;
}

PotentialWindow sample_potential(TorusPoint x0, const MapSpec& m,
                                 const SamplingFunction& phi, int n_from, int n_to) {
    if (n_from > n_to) throw std::invalid_argument("sample_potential requires n_from <= n_to");
    PotentialWindow w;
    w.n_from = n_from;
    w.n_to = n_to;
    w.values.resize(static_cast<std::size_t>(n_to - n_from) + 1);

    TorusPoint p = x0;
    if (n_from <= 0 && n_to >= 0) w.values[static_cast<std::size_t>(-n_from)] = phi(p);
    for (int n = 1; n <= n_to; ++n) {
        p = map_step(p, m);
        if (n >= n_from) w.values[static_cast<std::size_t>(n - n_from)] = phi(p);
    }
    p = x0;
    for (int n = -1; n >= n_from; --n) {
        p = map_inverse(p, m);
        if (n <= n_to) w.values[static_cast<std::size_t>(n - n_from)] = phi(p);
    }
    return w;
}

PotentialWindow shift(const PotentialWindow& v, int k) {
    PotentialWindow out = v;
    out.n_from = v.n_from - k;
    out.n_to = v.n_to - k;
    return out;
}

double shift_metric(const PotentialWindow& v, const PotentialWindow& w) {
    int lo = std::max(v.n_from, w.n_from);
    int hi = std::min(v.n_to, w.n_to);
    if (lo > hi) throw std::invalid_argument("shift_metric: windows do not overlap");
    double sum = 0.0;
    for (int n = lo; n <= hi; ++n) {
        sum += std::pow(2.0, -std::abs(n)) * std::abs(v.at(n) - w.at(n));
    }
    return sum;
}

std::vector<RecurrenceEvent> near_recurrences(TorusPoint x0, const MapSpec& m,
                                              double delta, long horizon) {
    if (!(delta >= 0.0)) throw std::invalid_argument("near_recurrences requires delta >= 0");
    if (horizon < 1) throw std::invalid_argument("near_recurrences requires horizon >= 1");
    std::vector<RecurrenceEvent> events;
    TorusPoint p = x0;
    for (long n = 1; n <= horizon; ++n) {
        p = map_step(p, m);
        double d = torus_dist(p, x0);
        if (d < delta) events.push_back(RecurrenceEvent{n, d});
    }
    return events;
}

OmegaWitness omega_limit_witness(TorusPoint x0, const MapSpec& m,
                                 const SamplingFunction& phi,
                                 const std::vector<RecurrenceEvent>& events,
                                 int half_width) {
    if (events.empty()) throw std::invalid_argument("omega_limit_witness: no recurrence events");
    if (half_width < 1) throw std::invalid_argument("omega_limit_witness requires K >= 1");

    OmegaWitness out;
    out.limit_window = sample_potential(x0, m, phi, -half_width, half_width);
    out.defects.reserve(events.size());
    for (const RecurrenceEvent& ev : events) {
        int n = static_cast<int>(ev.n);
        PotentialWindow recentred =
            shift(sample_potential(x0, m, phi, n - half_width, n + half_width), n);
        out.defects.push_back(shift_metric(out.limit_window, recentred));
    }
    return out;
}

}  // namespace smlab
