#pragma once

#include <cmath>

namespace smlab {

// 2x2 real matrix ((a, b), (c, d)), row-major.
struct Mat2 {
    double a = 1.0, b = 0.0;
    double c = 0.0, d = 1.0;

    static Mat2 identity() { return Mat2{}; }
};

inline Mat2 operator*(const Mat2& l, const Mat2& r) {
    return Mat2{l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

// Kahan's fma determinant: full relative accuracy even when ad and bc cancel.
inline double det(const Mat2& m) {
    double w = m.b * m.c;
    double e = std::fma(-m.b, m.c, w);
    double f = std::fma(m.a, m.d, -w);
    return f + e;
}

inline double frobenius_norm(const Mat2& m) {
    return std::sqrt(m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d);
}

inline double max_abs_entry(const Mat2& m) {
    return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                    std::max(std::abs(m.c), std::abs(m.d)));
}

// Operator 2-norm (largest singular value) by closed form:
// sigma_max^2 = (|m|_F^2 + sqrt(|m|_F^4 - 4 det^2)) / 2.
inline double operator_norm(const Mat2& m) {
    double f2 = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
    double dt = det(m);
    double disc = f2 * f2 - 4.0 * dt * dt;
    if (disc < 0.0) disc = 0.0;
    return std::sqrt(0.5 * (f2 + std::sqrt(disc)));
}

}  // namespace smlab
