#pragma once

#include <vector>

#include "smlab/torus.hpp"

namespace smlab {

// First-harmonic sampling function on the torus:
//   phi(x, y) = offset + cos_x cos 2pi x + sin_x sin 2pi x
//                      + cos_y cos 2pi y + sin_y sin 2pi y
struct SamplingFunction {
    double offset = 0.0;
    double cos_x = 0.0;
    double sin_x = 0.0;
    double cos_y = 0.0;
    double sin_y = 0.0;

    double operator()(const TorusPoint& p) const;

    // sup |phi| <= this; the uniform bound C carried by potential windows
    double sup_bound() const {
        return std::abs(offset) + std::abs(cos_x) + std::abs(sin_x) +
               std::abs(cos_y) + std::abs(sin_y);
    }

    bool is_constant() const {
        return cos_x == 0.0 && sin_x == 0.0 && cos_y == 0.0 && sin_y == 0.0;
    }

    static SamplingFunction zero() { return SamplingFunction{}; }
    static SamplingFunction cosine_x() { return SamplingFunction{0.0, 1.0, 0.0, 0.0, 0.0}; }
    // 2 kappa cos 2pi x, the almost Mathieu potential at coupling kappa
    static SamplingFunction almost_mathieu(double kappa) {
        return SamplingFunction{0.0, 2.0 * kappa, 0.0, 0.0, 0.0};
    }
};

// Finite two-sided slice V(n), n in [n_from, n_to].
struct PotentialWindow {
    int n_from = 0;
    int n_to = -1;
    std::vector<double> values;

    int size() const { return static_cast<int>(values.size()); }
    bool contains(int n) const { return n >= n_from && n <= n_to; }
    double at(int n) const { return values[static_cast<std::size_t>(n - n_from)]; }
};

// V(n) = phi(T^n x0) on [n_from, n_to]
PotentialWindow sample_potential(TorusPoint x0, const MapSpec& m,
                                 const SamplingFunction& phi, int n_from, int n_to);

// (S^k V)(n) = V(n + k); the result covers [n_from - k, n_to - k].
PotentialWindow shift(const PotentialWindow& v, int k);

// d(V, V') = sum over the common index range of 2^{-|n|} |V(n) - V'(n)|.
// Throws if the windows do not overlap.
double shift_metric(const PotentialWindow& v, const PotentialWindow& w);

// Error committed by evaluating the metric on [-K, K] instead of all of Z,
// for sequences bounded by sup_abs: 2 * sup_abs * sum_{|n|>K} 2^{-|n|}.
inline double metric_tail_bound(double sup_abs, int half_width) {
    return 4.0 * sup_abs * std::pow(2.0, -half_width);
}

struct RecurrenceEvent {
    long n = 0;            // return time, >= 1
    double distance = 0.0; // torus_dist(T^n x0, x0), < the search delta
};

// All n in [1, horizon] with torus_dist(T^n x0, x0) < delta, ascending.
// Exhaustive scan; an empty list is a valid result.
std::vector<RecurrenceEvent> near_recurrences(TorusPoint x0, const MapSpec& m,
                                              double delta, long horizon);

// Witness for the two-sided limit potential W(k) = phi(T^k x0), k in [-K, K],
// together with the metric defects d(W, S^{n_j} V) for each recurrence event.
struct OmegaWitness {
    PotentialWindow limit_window;       // on [-K, K]
    std::vector<double> defects;        // one per event, same order
};

OmegaWitness omega_limit_witness(TorusPoint x0, const MapSpec& m,
                                 const SamplingFunction& phi,
                                 const std::vector<RecurrenceEvent>& events,
                                 int half_width);

}  // namespace smlab
