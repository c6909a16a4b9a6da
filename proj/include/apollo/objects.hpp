#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <variant>

#include "apollo/circle.hpp"

namespace apollo {

template <class S>
struct PointObj {
    Vec2<S> p{};
};

template <class S>
struct CircleObj {
    Vec2<S> center{};
    S radius{};  // > 0
};

// The line nx*x + ny*y = d. Stored canonically: exact scalars are reduced to
// a primitive integer triple with the first nonzero of (nx, ny) positive;
// floats get a unit normal with the same sign rule. (nx,ny,d) and its
// negation denote the same unoriented line.
template <class S>
struct LineObj {
    S nx{};
    S ny{};
    S d{};
};

inline LineObj<Rat> canonical_line(Rat nx, Rat ny, Rat d) {
    if (nx == 0 && ny == 0) throw std::invalid_argument("line normal must be nonzero");
    BigInt m = boost::multiprecision::lcm(
        boost::multiprecision::lcm(denominator(nx), denominator(ny)), denominator(d));
    BigInt a = numerator(nx) * (m / denominator(nx));
    BigInt b = numerator(ny) * (m / denominator(ny));
    BigInt c = numerator(d) * (m / denominator(d));
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a), abs(b)), abs(c));
    if (g == 0) g = 1;
    a /= g; b /= g; c /= g;
    bool flip = a != 0 ? a < 0 : b < 0;
    if (flip) { a = -a; b = -b; c = -c; }
    return {Rat(a), Rat(b), Rat(c)};
}

inline LineObj<double> canonical_line(double nx, double ny, double d) {
    double norm = std::sqrt(nx * nx + ny * ny);
    if (norm == 0) throw std::invalid_argument("line normal must be nonzero");
    nx /= norm; ny /= norm; d /= norm;
    bool flip = std::fabs(nx) > 1e-14 ? nx < 0 : ny < 0;
    if (flip) { nx = -nx; ny = -ny; d = -d; }
    return {nx, ny, d};
}

template <class S>
using ApolloniusObject = std::variant<PointObj<S>, CircleObj<S>, LineObj<S>>;

template <class S>
using Config = std::array<ApolloniusObject<S>, 3>;

// A normalized object is a point or a circle; lines have been eliminated by
// an inversion before classification. The radius lives in the kernel's radius
// type so the exact kernel can keep the surd radii of line images.
template <class K>
struct NormObject {
    Vec2<typename K::Scalar> center{};
    typename K::Radius radius{};  // unsigned, zero for points
};

template <class K>
using NormConfig = std::array<NormObject<K>, 3>;

template <class K>
const char* kind_name(const NormObject<K>& o) {
    return K::radius_zero(o.radius) ? "point" : "circle";
}

template <class S>
const char* kind_name(const ApolloniusObject<S>& o) {
    if (std::holds_alternative<PointObj<S>>(o)) return "point";
    if (std::holds_alternative<CircleObj<S>>(o)) return "circle";
    return "line";
}

// Unoriented coincidence of two input objects (exact for K = ExactKernel,
// tolerance-banded for the float kernel).
template <class K>
bool coincident_objects(const ApolloniusObject<typename K::Scalar>& a,
                        const ApolloniusObject<typename K::Scalar>& b) {
    using S = typename K::Scalar;
    auto eq = [](const S& u, const S& v) {
        S au = u < 0 ? S(-u) : u;
        S av = v < 0 ? S(-v) : v;
        return K::sign(u - v, au + av) == 0;
    };
    if (a.index() != b.index()) return false;
    if (auto* pa = std::get_if<PointObj<S>>(&a)) {
        auto& pb = std::get<PointObj<S>>(b);
        return eq(pa->p.x, pb.p.x) && eq(pa->p.y, pb.p.y);
    }
    if (auto* ca = std::get_if<CircleObj<S>>(&a)) {
        auto& cb = std::get<CircleObj<S>>(b);
        return eq(ca->center.x, cb.center.x) && eq(ca->center.y, cb.center.y) &&
               eq(ca->radius, cb.radius);
    }
    auto& la = std::get<LineObj<S>>(a);
    auto& lb = std::get<LineObj<S>>(b);
    // canonical forms are comparable componentwise
    return eq(la.nx, lb.nx) && eq(la.ny, lb.ny) && eq(la.d, lb.d);
}

// Is point q incident with the object?
template <class K>
bool point_on_object(const Vec2<typename K::Scalar>& q,
                     const ApolloniusObject<typename K::Scalar>& o) {
    using S = typename K::Scalar;
    if (auto* p = std::get_if<PointObj<S>>(&o)) {
        S dx = q.x - p->p.x, dy = q.y - p->p.y;
        S d2 = dx * dx + dy * dy;
        return K::sign(d2, q.x * q.x + q.y * q.y + p->p.x * p->p.x + p->p.y * p->p.y) == 0;
    }
    if (auto* c = std::get_if<CircleObj<S>>(&o)) {
        S dx = q.x - c->center.x, dy = q.y - c->center.y;
        S d2 = dx * dx + dy * dy;
        S r2 = c->radius * c->radius;
        return K::sign(d2 - r2, d2 + r2) == 0;
    }
    auto& l = std::get<LineObj<S>>(o);
    S v = l.nx * q.x + l.ny * q.y - l.d;
    S scale = (l.nx < 0 ? S(-l.nx) : l.nx) * (q.x < 0 ? S(-q.x) : q.x) +
              (l.ny < 0 ? S(-l.ny) : l.ny) * (q.y < 0 ? S(-q.y) : q.y) +
              (l.d < 0 ? S(-l.d) : l.d);
    return K::sign(v, scale) == 0;
}

// --- solution objects -------------------------------------------------------
//
// Solutions are constructed numerically, so they live over double regardless
// of the engine kernel. The ideal point is the point at infinity: it appears
// as a solution only when every input object is a line (all lines meet there),
// where it is the pull-back of a degenerate point sitting on an inversion
// center.

struct SolCircle {
    double cx, cy, r;  // r > 0
};
struct SolLine {
    double nx, ny, d;  // unit normal, canonical sign
};
struct SolPoint {
    double x, y;
};
struct SolIdealPoint {};

using SolutionObject = std::variant<SolCircle, SolLine, SolPoint, SolIdealPoint>;

inline const char* kind_name(const SolutionObject& s) {
    switch (s.index()) {
        case 0: return "circle";
        case 1: return "line";
        case 2: return "point";
        default: return "ideal-point";
    }
}

// Sort key: kind first, then the numeric fields. Gives reports a stable order.
inline bool solution_less(const SolutionObject& a, const SolutionObject& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (auto* ca = std::get_if<SolCircle>(&a)) {
        auto& cb = std::get<SolCircle>(b);
        if (ca->cx != cb.cx) return ca->cx < cb.cx;
        if (ca->cy != cb.cy) return ca->cy < cb.cy;
        return ca->r < cb.r;
    }
    if (auto* la = std::get_if<SolLine>(&a)) {
        auto& lb = std::get<SolLine>(b);
        if (la->nx != lb.nx) return la->nx < lb.nx;
        if (la->ny != lb.ny) return la->ny < lb.ny;
        return la->d < lb.d;
    }
    if (auto* pa = std::get_if<SolPoint>(&a)) {
        auto& pb = std::get<SolPoint>(b);
        if (pa->x != pb.x) return pa->x < pb.x;
        return pa->y < pb.y;
    }
    return false;
}

} // namespace apollo
