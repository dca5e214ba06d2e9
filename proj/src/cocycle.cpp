#include "smlab/cocycle.hpp"

#include <cmath>
#include <stdexcept>

#include "smlab/rng.hpp"

namespace smlab {

void TransferProduct::absorb(const Mat2& factor) {
    double fd = det(factor);
    if (fd != 1.0) {
        // off the exact-SL(2) fast path: fold into the running determinant
        double dev = std::abs(fd - 1.0);
        if (dev > max_factor_defect_) max_factor_defect_ = dev;
        if (fd < 0.0) det_sign_ = -det_sign_;
        log_abs_det_ += std::log(std::abs(fd));
    }
    m_ = factor * m_;
    ++steps_;
    if (max_abs_entry(m_) > kRescaleTrigger) {
        double s = frobenius_norm(m_);
        m_.a /= s;
        m_.b /= s;
        m_.c /= s;
        m_.d /= s;
        log_scale_ += std::log(s);
        ++rescales_;
    }
}

double TransferProduct::sl2_defect() const {
    double accumulated = std::abs(det_sign_ * std::exp(log_abs_det_) - 1.0);
    return std::max(accumulated, max_factor_defect_);
}

TransferProduct cocycle_product(double energy, const PotentialWindow& v, TransferFn fn) {
    if (!v.contains(1) || v.n_to < 1)
        throw std::invalid_argument("cocycle_product: window must cover [1, N]");
    TransferProduct prod;
    for (int n = 1; n <= v.n_to; ++n) prod.absorb(fn(energy, v.at(n)));
    return prod;
}

double finite_lyapunov(double energy, TorusPoint x0, long n_steps, const MapSpec& m,
                       const SamplingFunction& phi, TransferFn fn) {
    if (n_steps < 1) throw std::invalid_argument("finite_lyapunov requires N >= 1");
    TransferProduct prod;
    TorusPoint p = x0;
    for (long n = 1; n <= n_steps; ++n) {
        p = map_step(p, m);
        prod.absorb(fn(energy, phi(p)));
    }
    double value = prod.log_norm() / static_cast<double>(n_steps);
    return value > 0.0 ? value : 0.0;
}

LyapunovEstimate mean_lyapunov(double energy, long n_steps, const MapSpec& m,
                               const SamplingFunction& phi, int samples,
                               std::uint64_t seed, TransferFn fn) {
    if (samples < 2) throw std::invalid_argument("mean_lyapunov requires samples >= 2");

    std::vector<double> values(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(j));
        TorusPoint x0{rng.uniform01(), rng.uniform01()};
        values[static_cast<std::size_t>(j)] = finite_lyapunov(energy, x0, n_steps, m, phi, fn);
    }

    double sum = 0.0;
    for (double v : values) sum += v;
    double mean = sum / samples;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    double std_error = std::sqrt(ss / (static_cast<double>(samples) * (samples - 1)));

    return LyapunovEstimate{energy, n_steps, mean, std_error, samples, seed};
}

HermanReport herman_floor_check(const std::vector<LyapunovEstimate>& sweep, double kappa) {
    if (!(kappa > 1.0)) throw std::invalid_argument("herman_floor_check requires kappa > 1");
    HermanReport report;
    report.kappa = kappa;
    report.floor_log = std::log(kappa);
    for (const LyapunovEstimate& e : sweep) {
        double floor = report.floor_log - 3.0 * e.std_error - 0.02;
        if (e.mean < floor)
            report.violations.push_back(HermanViolation{e.energy, e.mean, e.std_error});
    }
    return report;
}

}  // namespace smlab
