#pragma once

#include <cmath>
#include <cstdlib>
#include <random>

#include "apollo/kernel.hpp"
#include "apollo/objects.hpp"

namespace apollo {

// Dyadic rational in [lo, hi] with denominator 1, 2 or 4. Every quantity the
// classifier signs is then a rational bounded away from zero when nonzero,
// and the double image of the configuration is exact, so engine/oracle
// comparisons over random configurations test logic rather than rounding.
inline Rat random_dyadic(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<long> dist(4L * lo, 4L * hi);
    return Rat(dist(rng)) / 4;
}

inline ApolloniusObject<Rat> random_circle(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> rad(1, 32);
    return CircleObj<Rat>{{random_dyadic(rng, -12, 12), random_dyadic(rng, -12, 12)},
                          Rat(rad(rng)) / 4};
}

inline ApolloniusObject<Rat> random_point(std::mt19937_64& rng) {
    return PointObj<Rat>{{random_dyadic(rng, -12, 12), random_dyadic(rng, -12, 12)}};
}

namespace detail {

// A sign system whose quadratic or kernel coefficient is nonzero but
// vanishing has solutions escaping toward infinity; a fixed-tolerance
// numeric check cannot be expected to track those. Exact zeros stay: they
// are the honest line-solution configurations. All quantities here are
// dyadic products well inside 2^53, so the comparison is exact.
inline bool fair_sign_systems(const Config<Rat>& cfg) {
    double x[3], y[3], r[3];
    for (int i = 0; i < 3; ++i) {
        const auto& o = cfg[i];
        if (const auto* c = std::get_if<CircleObj<Rat>>(&o)) {
            x[i] = to_double(c->center.x);
            y[i] = to_double(c->center.y);
            r[i] = to_double(c->radius);
        } else {
            const auto& p = std::get<PointObj<Rat>>(o);
            x[i] = to_double(p.p.x);
            y[i] = to_double(p.p.y);
            r[i] = 0;
        }
    }
    for (int mask = 0; mask < 8; ++mask) {
        int s[3] = {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
        double a[2], b[2], c[2];
        for (int i = 1; i <= 2; ++i) {
            a[i - 1] = 2 * (x[i] - x[0]);
            b[i - 1] = 2 * (y[i] - y[0]);
            c[i - 1] = 2 * (s[i] * r[i] - s[0] * r[0]);
        }
        double vx = b[0] * c[1] - c[0] * b[1];
        double vy = c[0] * a[1] - a[0] * c[1];
        double vr = a[0] * b[1] - b[0] * a[1];
        double rowscale = 0;
        for (int i = 0; i < 2; ++i)
            rowscale = std::max({rowscale, std::fabs(a[i]), std::fabs(b[i]), std::fabs(c[i])});
        double vmax = std::max({std::fabs(vx), std::fabs(vy), std::fabs(vr)});
        if (vmax != 0 && vmax <= 1e-6 * rowscale * rowscale) return false;
        double alpha = vx * vx + vy * vy - vr * vr;
        double ascale = vx * vx + vy * vy + vr * vr;
        if (alpha != 0 && std::fabs(alpha) <= 1e-6 * ascale) return false;
    }
    return true;
}

} // namespace detail

// Random admissible configuration with `points` zero-radius members (0..3).
// Rejection keeps drawing until the objects are pairwise distinct and every
// tangency sign system is fair game for the numeric checker.
inline Config<Rat> random_config(std::mt19937_64& rng, int points = 0) {
    for (;;) {
        Config<Rat> cfg;
        for (int i = 0; i < 3; ++i)
            cfg[i] = i < points ? random_point(rng) : random_circle(rng);
        bool ok = !coincident_objects<ExactKernel>(cfg[0], cfg[1]) &&
                  !coincident_objects<ExactKernel>(cfg[0], cfg[2]) &&
                  !coincident_objects<ExactKernel>(cfg[1], cfg[2]);
        if (ok && detail::fair_sign_systems(cfg)) return cfg;
    }
}

// Random circle pair for tangent-line cross-checks; distinct centers so the
// pair spans a direction.
inline std::array<CircleObj<Rat>, 2> random_circle_pair(std::mt19937_64& rng) {
    for (;;) {
        auto a = std::get<CircleObj<Rat>>(random_circle(rng));
        auto b = std::get<CircleObj<Rat>>(random_circle(rng));
        if (!(a.center.x == b.center.x && a.center.y == b.center.y)) return {a, b};
    }
}

} // namespace apollo
