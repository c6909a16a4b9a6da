#pragma once

#include <cmath>

#include "apollo/rational.hpp"

namespace apollo {

template <class S>
struct Vec2 {
    S x{};
    S y{};

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const S& s, const Vec2& a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

template <class S>
S abs_s(const S& v) { return v < 0 ? S(-v) : v; }

template <class S>
S dot(const Vec2<S>& a, const Vec2<S>& b) { return a.x * b.x + a.y * b.y; }

template <class S>
S cross(const Vec2<S>& a, const Vec2<S>& b) { return a.x * b.y - a.y * b.x; }

// Unsigned radius as the quadratic surd c*sqrt(m), c >= 0 rational, m >= 1
// integer. Rational radii have m = 1. Eliminating a line by inversion yields
// a circle of radius (k2/2|h|)*sqrt(nx^2+ny^2), which is irrational whenever
// the primitive normal is not a Pythagorean pair, so exact classification
// must carry this one level of surd. No predicate ever needs more: radii
// enter every sign test either squared or as the pair product r1*r2.
struct QRad {
    Rat c{};
    BigInt m{1};
};

inline QRad qrad_from(const Rat& r) { return {r < 0 ? Rat(-r) : r, BigInt(1)}; }

inline double to_double(const QRad& r) {
    return to_double(r.c) * std::sqrt(r.m.convert_to<double>());
}

// Exact kernel: predicates are decided over arbitrary-precision rationals.
// The *_scale arguments every predicate computes are ignored here; they feed
// the float kernel's zero band.
struct ExactKernel {
    using Scalar = Rat;
    using Radius = QRad;
    static constexpr bool is_exact = true;

    static int sign(const Rat& value, const Rat& /*scale*/) { return value.sign(); }

    static Rat radius_q(const Radius& r) { return r.c * r.c * Rat(r.m); }
    static bool radius_zero(const Radius& r) { return r.c == 0; }
    static Radius radius_from(const Rat& r) { return qrad_from(r); }

    // sign of a + b*r1*r2 = a + (b*c1*c2)*sqrt(m1*m2), decided without
    // evaluating the square root: when a and the surd term disagree in sign,
    // compare a^2 against (b*c1*c2)^2 * m1*m2.
    static int sign_ab(const Rat& a, const Rat& /*a_scale*/, int b, const Radius& r1,
                       const Radius& r2) {
        Rat bc = Rat(b) * r1.c * r2.c;
        int sb = bc.sign();
        if (sb == 0) return a.sign();
        int sa = a.sign();
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rat lhs = a * a;
        Rat rhs = bc * bc * Rat(r1.m * r2.m);
        int cmp = (lhs > rhs) ? 1 : (lhs < rhs ? -1 : 0);
        return sa * cmp;
    }
};

// Float kernel: same formulas over double, every =0 decision taken inside a
// relative tolerance band around zero.
struct FloatKernel {
    using Scalar = double;
    using Radius = double;
    static constexpr bool is_exact = false;

    // Process-wide band width (relative). The CLI sets it from --tol before
    // any computation; the library never mutates it.
    static double& tolerance() {
        static double tol = 1e-9;
        return tol;
    }

    static int sign(double value, double scale) {
        double band = tolerance() * (scale > 1.0 ? scale : 1.0);
        if (value > band) return 1;
        if (value < -band) return -1;
        return 0;
    }

    static double radius_q(double r) { return r * r; }
    static bool radius_zero(double r) { return r == 0.0; }
    static double radius_from(double r) { return std::fabs(r); }

    static int sign_ab(double a, double a_scale, int b, double r1, double r2) {
        double t = double(b) * r1 * r2;
        return sign(a + t, a_scale + std::fabs(t));
    }
};

} // namespace apollo
