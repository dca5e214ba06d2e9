#include "smlab/torus.hpp"

#include <numbers>
#include <stdexcept>

#include "smlab/cocycle.hpp"

namespace smlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

MapSpec MapSpec::standard(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("standard map requires lambda > 0");
    return MapSpec{MapKind::standard_map, lambda};
}

MapSpec MapSpec::circle_rotation(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("rotation requires alpha in (0, 1)");
    return MapSpec{MapKind::rotation, alpha};
}

TorusPoint map_step(TorusPoint p, const MapSpec& m) {
    if (m.kind == MapKind::standard_map) {
        double x = reduce01(-p.y + 2.0 * p.x + m.param * std::sin(kTwoPi * p.x));
        return TorusPoint{x, p.x};
    }
    return TorusPoint{reduce01(p.x + m.param), p.y};
}

TorusPoint map_inverse(TorusPoint p, const MapSpec& m) {
    if (m.kind == MapKind::standard_map) {
        double y = reduce01(2.0 * p.y + m.param * std::sin(kTwoPi * p.y) - p.x);
        return TorusPoint{p.y, y};
    }
    return TorusPoint{reduce01(p.x - m.param), p.y};
}

Mat2 tangent_step(const TorusPoint& p, double lambda) {
    return Mat2{2.0 + kTwoPi * lambda * std::cos(kTwoPi * p.x), -1.0, 1.0, 0.0};
}

std::vector<TorusPoint> orbit(TorusPoint p0, const MapSpec& m, int n_from, int n_to) {
    if (n_from > n_to) throw std::invalid_argument("orbit requires n_from <= n_to");
    std::vector<TorusPoint> out(static_cast<std::size_t>(n_to - n_from) + 1);

    if (n_from <= 0 && n_to >= 0) out[static_cast<std::size_t>(-n_from)] = p0;

    TorusPoint p = p0;
    for (int n = 1; n <= n_to; ++n) {
        p = map_step(p, m);
        if (n >= n_from) out[static_cast<std::size_t>(n - n_from)] = p;
    }
    p = p0;
    for (int n = -1; n >= n_from; --n) {
        p = map_inverse(p, m);
        if (n <= n_to) out[static_cast<std::size_t>(n - n_from)] = p;
    }
    return out;
}

double tangent_lyapunov(TorusPoint p0, double lambda, long n_steps) {
    if (n_steps < 1) throw std::invalid_argument("tangent_lyapunov requires N >= 1");
    MapSpec m = MapSpec::standard(lambda);
    TransferProduct prod;
    TorusPoint p = p0;
    for (long n = 0; n < n_steps; ++n) {
        prod.absorb(tangent_step(p, lambda));
        p = map_step(p, m);
    }
    double value = prod.log_norm() / static_cast<double>(n_steps);
    return value > 0.0 ? value : 0.0;
}

}  // namespace smlab
