#pragma once

#include <stdexcept>

#include "apollo/kernel.hpp"

namespace apollo {

// A circle with a signed radius. r > 0 and r < 0 are the two orientations of
// the same point set, r = 0 is a point. The triple (cx, cy, r) is treated as
// a point of R^3 carrying the quadratic form q(c) = cx^2 + cy^2 - r^2.
template <class S>
struct OrientedCircle {
    Vec2<S> center{};
    S r{};

    friend bool operator==(const OrientedCircle& a, const OrientedCircle& b) {
        return a.center == b.center && a.r == b.r;
    }
};

template <class S>
OrientedCircle<S> make_circle(S cx, S cy, S r) {
    return OrientedCircle<S>{{std::move(cx), std::move(cy)}, std::move(r)};
}

template <class S>
OrientedCircle<S> reverse(const OrientedCircle<S>& c) {
    return {c.center, -c.r};
}

// Subtracts t from the signed radius, keeping the center: c - (0,0,t) in the
// three-space of circles. Powers are invariant under a common shift, so a
// tangency problem can be reduced until one circle becomes a point.
template <class S>
OrientedCircle<S> radius_shift(const OrientedCircle<S>& c, const S& t) {
    return {c.center, c.r - t};
}

template <class S>
S lorentz_q(const OrientedCircle<S>& c) {
    return c.center.x * c.center.x + c.center.y * c.center.y - c.r * c.r;
}

// power(c1, c2) = q(c1 - c2) = |x1 - x2|^2 - (r1 - r2)^2.
// Zero exactly when the two oriented circles are tangent with matching
// orientations (for points: when the point lies on the circle).
template <class S>
S power(const OrientedCircle<S>& c1, const OrientedCircle<S>& c2) {
    S dx = c1.center.x - c2.center.x;
    S dy = c1.center.y - c2.center.y;
    S dr = c1.r - c2.r;
    return dx * dx + dy * dy - dr * dr;
}

// sign of power(c1, c2) under kernel K, with the matching magnitude scale.
template <class K>
int power_sign(const OrientedCircle<typename K::Scalar>& c1,
               const OrientedCircle<typename K::Scalar>& c2) {
    using S = typename K::Scalar;
    S dx = c1.center.x - c2.center.x;
    S dy = c1.center.y - c2.center.y;
    S dr = c1.r - c2.r;
    S sq = dx * dx + dy * dy;
    S rr = dr * dr;
    return K::sign(sq - rr, sq + rr);
}

template <class K>
bool coincident_unoriented(const OrientedCircle<typename K::Scalar>& a,
                           const OrientedCircle<typename K::Scalar>& b) {
    using S = typename K::Scalar;
    auto diff_zero = [](const S& u, const S& v) {
        S au = u < 0 ? S(-u) : u;
        S av = v < 0 ? S(-v) : v;
        return K::sign(u - v, au + av) == 0;
    };
    S ra = a.r < 0 ? S(-a.r) : a.r;
    S rb = b.r < 0 ? S(-b.r) : b.r;
    return diff_zero(a.center.x, b.center.x) && diff_zero(a.center.y, b.center.y) &&
           diff_zero(ra, rb);
}

template <class K>
bool is_tangent_oriented(const OrientedCircle<typename K::Scalar>& c1,
                         const OrientedCircle<typename K::Scalar>& c2) {
    return power_sign<K>(c1, c2) == 0;
}

// Number of common oriented tangent lines: 2, 1 or 0 as power is >0, =0, <0.
template <class K>
int tangent_count_oriented(const OrientedCircle<typename K::Scalar>& c1,
                           const OrientedCircle<typename K::Scalar>& c2) {
    if (c1.r == 0 || c2.r == 0)
        throw std::invalid_argument("tangent_count_oriented requires nonzero radii");
    if (coincident_unoriented<K>(c1, c2))
        throw CoincidentObjectsError("tangent_count_oriented on coincident circles");
    int s = power_sign<K>(c1, c2);
    return s > 0 ? 2 : (s == 0 ? 1 : 0);
}

enum class PairRelation {
    DisjointOutside,     // (+,+)
    CrossSameSense,      // (+,-)
    CrossOppositeSense,  // (-,+)
    OneEnclosesOther,    // (-,-)
    TangentExternal,     // zero slot paired with +
    TangentInternal,     // zero slot paired with -
    Coincident,          // identical unoriented circles; pair_relation throws instead
};

inline const char* to_string(PairRelation r) {
    switch (r) {
        case PairRelation::DisjointOutside: return "disjoint-outside";
        case PairRelation::CrossSameSense: return "cross-same-sense";
        case PairRelation::CrossOppositeSense: return "cross-opposite-sense";
        case PairRelation::OneEnclosesOther: return "one-encloses-other";
        case PairRelation::TangentExternal: return "tangent-external";
        case PairRelation::TangentInternal: return "tangent-internal";
        case PairRelation::Coincident: return "coincident";
    }
    return "?";
}

// Relation of two oriented circles of nonzero radius, decided from the pair
// of signs (power(c1,c2), power(c1,reverse(c2))). Both zero is impossible for
// nonzero radii, and which slot carries the zero only reflects the input
// orientations, so tangency reads off the surviving sign.
template <class K>
PairRelation pair_relation(const OrientedCircle<typename K::Scalar>& c1,
                           const OrientedCircle<typename K::Scalar>& c2) {
    if (c1.r == 0 || c2.r == 0)
        throw std::invalid_argument("pair_relation requires nonzero radii");
    if (coincident_unoriented<K>(c1, c2))
        throw CoincidentObjectsError("pair_relation on coincident circles");
    int s0 = power_sign<K>(c1, c2);
    int s1 = power_sign<K>(c1, reverse(c2));
    if (s0 == 0 || s1 == 0) {
        int other = s0 == 0 ? s1 : s0;
        if (other == 0)
            throw InternalInconsistencyError("both pair powers vanished for nonzero radii");
        return other > 0 ? PairRelation::TangentExternal : PairRelation::TangentInternal;
    }
    if (s0 > 0) return s1 > 0 ? PairRelation::DisjointOutside : PairRelation::CrossSameSense;
    return s1 > 0 ? PairRelation::CrossOppositeSense : PairRelation::OneEnclosesOther;
}

enum class Enclosure { No, Yes, Strictly };

// Does the open disk of c1 contain the open disk of c2? Radii are taken
// unsigned; internal tangency still counts as Yes, Strictly needs the closed
// disk of c2 inside the open disk of c1.
template <class K>
Enclosure encloses(const OrientedCircle<typename K::Scalar>& c1,
                   const OrientedCircle<typename K::Scalar>& c2) {
    using S = typename K::Scalar;
    S a1 = c1.r < 0 ? S(-c1.r) : c1.r;
    S a2 = c2.r < 0 ? S(-c2.r) : c2.r;
    S t = a1 - a2;
    if (K::sign(t, a1 + a2) < 0) return Enclosure::No;
    S dx = c1.center.x - c2.center.x;
    S dy = c1.center.y - c2.center.y;
    S d2 = dx * dx + dy * dy;
    S t2 = t * t;
    int s = K::sign(d2 - t2, d2 + t2);
    if (s > 0) return Enclosure::No;
    return s == 0 ? Enclosure::Yes : Enclosure::Strictly;
}

} // namespace apollo
