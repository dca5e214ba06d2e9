#pragma once

#include <complex>
#include <vector>

#include "smlab/cocycle.hpp"
#include "smlab/potential.hpp"

namespace smlab {

// Finite section of H = V + hopping: symmetric tridiagonal with the window
// values on the diagonal and 1 on the off-diagonals.
struct JacobiWindow {
    int n_from = 0;
    std::vector<double> diagonal;

    int size() const { return static_cast<int>(diagonal.size()); }
    int n_to() const { return n_from + size() - 1; }
    bool contains(int n) const { return n >= n_from && n <= n_to(); }
};

JacobiWindow finite_section(const PotentialWindow& v);

// All eigenvalues, ascending, by Sturm-sequence bisection to absolute
// tolerance 1e-10. They lie in [min V - 2, max V + 2].
std::vector<double> eigenvalues(const JacobiWindow& h);

// Number of eigenvalues strictly below x (Sturm pivot count). Exposed for
// tests and energy bracketing.
int eigenvalue_count_below(const JacobiWindow& h, double x);

struct ComplexEnergy {
    double energy = 0.0;
    double epsilon = 0.0;  // imaginary part, must be > 0
};

// How the tridiagonal solve closes the two ends of the window.
//   dirichlet: literal resolvent of the finite matrix.
//   open_free: both ends absorb into a free half-line via its exact boundary
//              self-energy (z - sqrt(z^2 - 4))/2. For epsilon below the
//              finite-section level spacing the Dirichlet ends reflect an O(1)
//              echo into Re G at the center sites, so bulk quantities use this
//              closure; for a free window it reproduces the whole-line Green's
//              function at every site.
enum class GreenBoundary { dirichlet, open_free };

// Diagonal Green's function ((H - z)^{-1})(n, n) by a two-sided complex
// continued-fraction sweep. Throws if n is outside the window or epsilon <= 0.
std::complex<double> green_diagonal(const JacobiWindow& h, ComplexEnergy z, int n,
                                    GreenBoundary boundary = GreenBoundary::dirichlet);

// All diagonal entries in one O(size) pass.
std::vector<std::complex<double>> green_diagonal_all(
    const JacobiWindow& h, ComplexEnergy z,
    GreenBoundary boundary = GreenBoundary::dirichlet);

struct DefectReport {
    std::vector<double> grid;        // energies scanned
    double epsilon = 0.0;
    int center_from = 0;             // site range the defect was measured on
    int center_to = 0;
    std::vector<double> site_max;    // per center site: max over the grid of |Re G|
    double defect = 0.0;             // max over sites and grid
};

// Quantitative reflectionless diagnostic: max |Re G(t + i eps)(n, n)| over the
// grid and the center_width middle sites. Small defect is numerical evidence
// that the window's two-sided extension is reflectionless on the grid's
// energy range, large defect is evidence against.
DefectReport reflectionless_defect(const PotentialWindow& v,
                                   const std::vector<double>& grid, double epsilon,
                                   int center_width,
                                   GreenBoundary boundary = GreenBoundary::open_free);

struct EnergyInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// Maximal runs of consecutive grid energies whose mean exponent sits below
// the threshold, merged into closed intervals. The sweep must be sorted by
// energy and the threshold positive.
std::vector<EnergyInterval> zero_exponent_set(const std::vector<LyapunovEstimate>& sweep,
                                              double threshold);

}  // namespace smlab
