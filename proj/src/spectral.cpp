#include "smlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smlab {

JacobiWindow finite_section(const PotentialWindow& v) {
    if (v.values.empty()) throw std::invalid_argument("finite_section: empty window");
    return JacobiWindow{v.n_from, v.values};
}

int eigenvalue_count_below(const JacobiWindow& h, double x) {
    // Sturm pivots of H - x with unit off-diagonals; negatives count
    // eigenvalues below x. Zero pivots are nudged negative.
    int count = 0;
    double d = 1.0;
    bool first = true;
    for (double a : h.diagonal) {
        d = first ? (a - x) : (a - x) - 1.0 / d;
        first = false;
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<double> eigenvalues(const JacobiWindow& h) {
    const int n = h.size();
    double lo = h.diagonal[0], hi = h.diagonal[0];
    for (double a : h.diagonal) {
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    lo -= 2.0 + 1e-8;  // Gershgorin
    hi += 2.0 + 1e-8;

    constexpr double kTol = 1e-10;
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double a = lo, b = hi;
        while (b - a > kTol) {
            double mid = 0.5 * (a + b);
            if (eigenvalue_count_below(h, mid) >= k + 1)
                b = mid;
            else
                a = mid;
        }
        out[static_cast<std::size_t>(k)] = 0.5 * (a + b);
    }
    return out;
}

namespace {

// Fixed point of the free half-line continued fraction, |tail| < 1 branch;
// the exact boundary self-energy absorbing an infinite free lead.
std::complex<double> free_halfline_tail(std::complex<double> z) {
    std::complex<double> s = std::sqrt(z * z - 4.0);
    std::complex<double> r1 = 0.5 * (-z + s);
    std::complex<double> r2 = 0.5 * (-z - s);
    return std::abs(r1) <= std::abs(r2) ? r1 : r2;
}

}  // namespace

std::vector<std::complex<double>> green_diagonal_all(const JacobiWindow& h, ComplexEnergy z,
                                                     GreenBoundary boundary) {
    if (!(z.epsilon > 0.0)) throw std::invalid_argument("green_diagonal: epsilon must be > 0");
    const int n = h.size();
    const std::complex<double> zc(z.energy, z.epsilon);
    const std::complex<double> init =
        boundary == GreenBoundary::open_free ? free_halfline_tail(zc) : std::complex<double>(0.0);

    // left[k]: sites <= k eliminated into a single complex shift
    std::vector<std::complex<double>> left(static_cast<std::size_t>(n));
    std::complex<double> acc = init;
    for (int k = 0; k < n; ++k) {
        acc = 1.0 / (h.diagonal[static_cast<std::size_t>(k)] - zc - acc);
        left[static_cast<std::size_t>(k)] = acc;
    }
    std::vector<std::complex<double>> right(static_cast<std::size_t>(n));
    acc = init;
    for (int k = n - 1; k >= 0; --k) {
        acc = 1.0 / (h.diagonal[static_cast<std::size_t>(k)] - zc - acc);
        right[static_cast<std::size_t>(k)] = acc;
    }

    std::vector<std::complex<double>> g(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::complex<double> l = k > 0 ? left[static_cast<std::size_t>(k - 1)] : init;
        std::complex<double> r = k < n - 1 ? right[static_cast<std::size_t>(k + 1)] : init;
        g[static_cast<std::size_t>(k)] = 1.0 / (h.diagonal[static_cast<std::size_t>(k)] - zc - l - r);
    }
    return g;
}

std::complex<double> green_diagonal(const JacobiWindow& h, ComplexEnergy z, int n,
                                    GreenBoundary boundary) {
    if (!h.contains(n)) throw std::invalid_argument("green_diagonal: site outside window");
    return green_diagonal_all(h, z, boundary)[static_cast<std::size_t>(n - h.n_from)];
}

DefectReport reflectionless_defect(const PotentialWindow& v, const std::vector<double>& grid,
                                   double epsilon, int center_width, GreenBoundary boundary) {
    if (center_width < 1) throw std::invalid_argument("reflectionless_defect: center_width < 1");
    if (center_width > v.size() / 2)
        throw std::invalid_argument("reflectionless_defect: center_width > window size / 2");
    if (!(epsilon > 0.0)) throw std::invalid_argument("reflectionless_defect: epsilon must be > 0");

    JacobiWindow h = finite_section(v);
    const int offset = (h.size() - center_width) / 2;

    DefectReport report;
    report.grid = grid;
    report.epsilon = epsilon;
    report.center_from = h.n_from + offset;
    report.center_to = report.center_from + center_width - 1;
    report.site_max.assign(static_cast<std::size_t>(center_width), 0.0);

    for (double t : grid) {
        auto g = green_diagonal_all(h, ComplexEnergy{t, epsilon}, boundary);
        for (int i = 0; i < center_width; ++i) {
            double re = std::abs(g[static_cast<std::size_t>(offset + i)].real());
            auto& best = report.site_max[static_cast<std::size_t>(i)];
            if (re > best) best = re;
        }
    }
    report.defect = *std::max_element(report.site_max.begin(), report.site_max.end());
    return report;
}

std::vector<EnergyInterval> zero_exponent_set(const std::vector<LyapunovEstimate>& sweep,
                                              double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("zero_exponent_set: threshold must be > 0");
    for (std::size_t i = 1; i < sweep.size(); ++i)
        if (sweep[i].energy < sweep[i - 1].energy)
            throw std::invalid_argument("zero_exponent_set: sweep must be sorted by energy");

    std::vector<EnergyInterval> out;
    std::size_t i = 0;
    while (i < sweep.size()) {
        if (sweep[i].mean < threshold) {
            std::size_t j = i;
            while (j + 1 < sweep.size() && sweep[j + 1].mean < threshold) ++j;
            out.push_back(EnergyInterval{sweep[i].energy, sweep[j].energy});
            i = j + 1;
        } else {
            ++i;
        }
    }
    return out;
}

}  // namespace smlab
