#pragma once

#include <vector>

#include "smlab/mat2.hpp"

namespace smlab {

// Reduce to [0, 1). floor-based so large negatives work too.
inline double reduce01(double x) {
    double r = x - std::floor(x);
    return r < 1.0 ? r : 0.0;
}

struct TorusPoint {
    double x = 0.0;
    double y = 0.0;
};

// max over coordinates of the circle distance min(|d|, 1-|d|)
inline double torus_dist(const TorusPoint& p, const TorusPoint& q) {
    double dx = std::abs(p.x - q.x);
    dx = std::min(dx, 1.0 - dx);
    double dy = std::abs(p.y - q.y);
    dy = std::min(dy, 1.0 - dy);
    return std::max(dx, dy);
}

enum class MapKind { standard_map, rotation };

// Either the standard family f_lambda(x,y) = (-y + 2x + lambda sin 2pi x, x)
// or a rigid circle rotation in x (validation dynamics with closed-form
// cocycle oracles).
struct MapSpec {
    MapKind kind = MapKind::standard_map;
    double param = 0.0;  // lambda for standard_map, alpha for rotation

    static MapSpec standard(double lambda);   // requires lambda > 0
    static MapSpec circle_rotation(double alpha);  // requires alpha in (0,1)
};

TorusPoint map_step(TorusPoint p, const MapSpec& m);
TorusPoint map_inverse(TorusPoint p, const MapSpec& m);

// Jacobian of the standard map at p: ((2 + 2 pi lambda cos 2 pi x, -1), (1, 0)).
Mat2 tangent_step(const TorusPoint& p, double lambda);

// Points T^n p0 for n in [n_from, n_to]; index n lives at [n - n_from].
// Negative indices walk map_inverse.
std::vector<TorusPoint> orbit(TorusPoint p0, const MapSpec& m, int n_from, int n_to);

// Finite-time exponent (1/N) log || DT(T^{N-1} p0) ... DT(p0) || of the
// tangent cocycle, a numerical hyperbolicity diagnostic.
double tangent_lyapunov(TorusPoint p0, double lambda, long n_steps);

}  // namespace smlab
