#pragma once

#include <cstdint>
#include <vector>

#include "smlab/mat2.hpp"
#include "smlab/potential.hpp"

namespace smlab {

// One-step transfer matrix ((E - v, -1), (1, 0)) of u(n+1) + u(n-1) + v u(n) = E u(n).
inline Mat2 transfer_matrix(double energy, double site_value) {
    return Mat2{energy - site_value, -1.0, 1.0, 0.0};
}

using TransferFn = Mat2 (*)(double energy, double site_value);

// Left-accumulated product of 2x2 factors, kept overflow-safe by pulling the
// Frobenius norm out into log_scale whenever an entry passes 1e8. The
// represented matrix is exp(log_scale) * scaled().
//
// Determinant bookkeeping: for a product with growth rate gamma the second
// singular value of scaled() sits at exp(-2 log_scale), which is below double
// precision as soon as log_scale > ~18, so the determinant of the stored
// entries is pure cancellation noise. The determinant of the represented
// product is therefore accumulated factor by factor (each factor det is
// computed exactly from its entries; scalar extraction cancels algebraically).
// sl2_defect() reports how far that tracked determinant is from 1, together
// with the worst single-factor deviation, so a corrupted factor is caught at
// any product length.
class TransferProduct {
  public:
    TransferProduct() = default;

    void absorb(const Mat2& factor);

    const Mat2& scaled() const { return m_; }
    double log_scale() const { return log_scale_; }
    long steps() const { return steps_; }
    int rescale_count() const { return rescales_; }

    // log of the operator norm of the represented product (>= 0 in exact
    // arithmetic for unit-determinant factors)
    double log_norm() const { return log_scale_ + std::log(operator_norm(m_)); }

    // |det - 1| of the represented product, maxed with the worst per-factor
    // |det - 1| seen while absorbing
    double sl2_defect() const;

    static constexpr double kRescaleTrigger = 1e8;

  private:
    Mat2 m_ = Mat2::identity();
    double log_scale_ = 0.0;
    double log_abs_det_ = 0.0;
    int det_sign_ = 1;
    double max_factor_defect_ = 0.0;
    long steps_ = 0;
    int rescales_ = 0;
};

// M_N(E) over the window, which must cover sites [1, N]; site 1 is applied
// first (rightmost factor).
TransferProduct cocycle_product(double energy, const PotentialWindow& v,
                                TransferFn fn = transfer_matrix);

// (1/N) log || M_N(E, x0) ||, operator 2-norm; clamped at 0, where exact
// arithmetic pins it anyway.
double finite_lyapunov(double energy, TorusPoint x0, long n_steps, const MapSpec& m,
                       const SamplingFunction& phi, TransferFn fn = transfer_matrix);

struct LyapunovEstimate {
    double energy = 0.0;
    long n_steps = 0;
    double mean = 0.0;
    double std_error = 0.0;
    int samples = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo estimate of the mean exponent L_N(E) over Lebesgue-uniform
// starting points. Sample j draws its point from sample_stream(seed, j), and
// the reduction runs in sample order, so the result is a pure function of
// (energy, n_steps, m, phi, samples, seed). Requires samples >= 2.
LyapunovEstimate mean_lyapunov(double energy, long n_steps, const MapSpec& m,
                               const SamplingFunction& phi, int samples,
                               std::uint64_t seed, TransferFn fn = transfer_matrix);

struct HermanViolation {
    double energy = 0.0;
    double mean = 0.0;
    double std_error = 0.0;
};

struct HermanReport {
    double kappa = 0.0;
    double floor_log = 0.0;  // log kappa
    std::vector<HermanViolation> violations;

    bool ok() const { return violations.empty(); }
};

// For sweeps of the almost Mathieu potential 2 kappa cos 2pi x, kappa > 1:
// flags every estimate with mean < log kappa - 3 std_error - 0.02 (the 0.02
// absorbs finite-N bias). Throws for kappa <= 1.
HermanReport herman_floor_check(const std::vector<LyapunovEstimate>& sweep, double kappa);

}  // namespace smlab
