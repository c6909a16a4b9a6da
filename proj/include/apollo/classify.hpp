#pragma once

#include <array>
#include <optional>
#include <vector>

#include "apollo/inversion.hpp"

namespace apollo {

// Signs of d^2 - (r1 - r2)^2 and d^2 - (r1 + r2)^2 for the unsigned radii of
// a normalized pair. Everything the classifier decides about a pair derives
// from these two signs plus the radius order:
//   circles cross            iff sminus > 0 and splus < 0
//   tangent (one common pt)  iff sminus == 0 or splus == 0
//   disjoint, one outside    iff splus > 0 and sminus > 0
//   disjoint, one inside     iff sminus < 0
// A zero radius collapses both to the sign of d^2 - q of the other object.
struct PairSigns {
    int sminus = 0;
    int splus = 0;
};

template <class K>
PairSigns pair_signs(const NormObject<K>& a, const NormObject<K>& b) {
    using S = typename K::Scalar;
    Vec2<S> d = a.center - b.center;
    S d2 = dot(d, d);
    S qa = K::radius_q(a.radius);
    S qb = K::radius_q(b.radius);
    S s0 = d2 - qa - qb;
    S scale = d2 + qa + qb;
    return {K::sign_ab(s0, scale, 2, a.radius, b.radius),
            K::sign_ab(s0, scale, -2, a.radius, b.radius)};
}

// Number of common points of the two unoriented objects.
inline int pair_point_count(const PairSigns& s) {
    if (s.sminus > 0 && s.splus < 0) return 2;
    if (s.sminus == 0 || s.splus == 0) return 1;
    return 0;
}

enum class IncidenceKind { Disjoint, Tangent, Crossing, PointOn, PointOff, PointPair };

inline const char* to_string(IncidenceKind k) {
    switch (k) {
        case IncidenceKind::Disjoint: return "disjoint";
        case IncidenceKind::Tangent: return "tangent";
        case IncidenceKind::Crossing: return "crossing";
        case IncidenceKind::PointOn: return "point-on";
        case IncidenceKind::PointOff: return "point-off";
        case IncidenceKind::PointPair: return "distinct-points";
    }
    return "?";
}

// Pairwise incidence with display coordinates. The kind is decided by the
// kernel; the coordinates are always evaluated in double (they may be
// irrational even for rational inputs).
struct PairIncidence {
    IncidenceKind kind{};
    int points = 0;
    std::array<std::array<double, 2>, 2> at{};
};

template <class K>
PairIncidence pairwise_incidence(const NormObject<K>& a, const NormObject<K>& b) {
    PairSigns s = pair_signs<K>(a, b);
    bool pa = K::radius_zero(a.radius);
    bool pb = K::radius_zero(b.radius);
    PairIncidence out;
    out.points = pair_point_count(s);
    double ax = to_double(a.center.x), ay = to_double(a.center.y);
    double bx = to_double(b.center.x), by = to_double(b.center.y);
    double qa = to_double(K::radius_q(a.radius));
    double qb = to_double(K::radius_q(b.radius));
    if (pa && pb) {
        out.kind = IncidenceKind::PointPair;
        return out;
    }
    if (pa || pb) {
        out.kind = out.points ? IncidenceKind::PointOn : IncidenceKind::PointOff;
        if (out.points) out.at[0] = pa ? std::array<double, 2>{ax, ay} : std::array<double, 2>{bx, by};
        return out;
    }
    out.kind = out.points == 2   ? IncidenceKind::Crossing
               : out.points == 1 ? IncidenceKind::Tangent
                                 : IncidenceKind::Disjoint;
    if (out.points > 0) {
        double dx = bx - ax, dy = by - ay;
        double d2 = dx * dx + dy * dy;
        double t = (d2 + qa - qb) / (2 * d2);
        double fx = ax + t * dx, fy = ay + t * dy;
        double h2 = qa - t * t * d2;
        double h = h2 > 0 ? std::sqrt(h2 / d2) : 0.0;
        out.at[0] = {fx - h * dy, fy + h * dx};
        out.at[1] = {fx + h * dy, fy - h * dx};
        if (out.points == 1) out.at[0] = {fx, fy};
    }
    return out;
}

// Common points of all three objects, with display coordinates. The count is
// decided exactly for the exact kernel: double points are rational when the
// radical axes meet properly, and in the coaxial case the count is the sign
// of a rational line-circle discriminant.
struct DoublePointsInfo {
    int k = 0;
    std::vector<std::array<double, 2>> points;
};

template <class K>
DoublePointsInfo double_points(const NormConfig<K>& cfg) {
    using S = typename K::Scalar;
    DoublePointsInfo out;
    int z = 0;
    for (const auto& o : cfg)
        if (K::radius_zero(o.radius)) ++z;
    if (z >= 2) return out;  // distinct point objects never share a common point
    if (z == 1) {
        int pi = 0;
        while (!K::radius_zero(cfg[pi].radius)) ++pi;
        const auto& p = cfg[pi].center;
        for (int i = 0; i < 3; ++i) {
            if (i == pi) continue;
            Vec2<S> d = p - cfg[i].center;
            S v = dot(d, d) - K::radius_q(cfg[i].radius);
            if (K::sign(v, dot(d, d) + K::radius_q(cfg[i].radius)) != 0) return out;
        }
        out.k = 1;
        out.points.push_back({to_double(p.x), to_double(p.y)});
        return out;
    }
    // three circles: intersect the radical axes 2*(xj - x1).P = ej
    std::array<S, 3> q{K::radius_q(cfg[0].radius), K::radius_q(cfg[1].radius),
                       K::radius_q(cfg[2].radius)};
    auto rhs = [&](int j) {
        return dot(cfg[j].center, cfg[j].center) - q[j] - dot(cfg[0].center, cfg[0].center) +
               q[0];
    };
    Vec2<S> u = cfg[1].center - cfg[0].center;
    Vec2<S> v = cfg[2].center - cfg[0].center;
    S e1 = rhs(1), e2 = rhs(2);
    S det = cross(u, v);
    S det_scale = abs_s(u.x * v.y) + abs_s(u.y * v.x);
    auto pow0_sign = [&](const Vec2<S>& p) {
        Vec2<S> d = p - cfg[0].center;
        S w = dot(d, d) - q[0];
        return K::sign(w, dot(d, d) + q[0]);
    };
    if (K::sign(det, det_scale) != 0) {
        // radical center; 2*t is folded into the rhs terms
        Vec2<S> rc{(e1 * v.y - e2 * u.y) / (2 * det), (e2 * u.x - e1 * v.x) / (2 * det)};
        if (pow0_sign(rc) == 0) {
            out.k = 1;
            out.points.push_back({to_double(rc.x), to_double(rc.y)});
        }
        return out;
    }
    // parallel axes: either concentric circles somewhere (no common point) or
    // a coaxial pencil sharing one radical axis
    if (K::sign(dot(u, u), dot(u, u)) == 0 || K::sign(dot(v, v), dot(v, v)) == 0) return out;
    S m1 = u.x * e2 - v.x * e1;
    S m2 = u.y * e2 - v.y * e1;
    S mscale1 = abs_s(u.x * e2) + abs_s(v.x * e1);
    S mscale2 = abs_s(u.y * e2) + abs_s(v.y * e1);
    if (K::sign(m1, mscale1) != 0 || K::sign(m2, mscale2) != 0) return out;
    // common axis 2u.P = e1 against circle 0: discriminant of the pencil
    S uu = dot(u, u);
    S w = 2 * dot(u, cfg[0].center) - e1;  // 2*(u.x0) - e1, distance numerator
    S disc = 4 * q[0] * uu - w * w;
    int ds = K::sign(disc, 4 * q[0] * uu + w * w);
    out.k = ds > 0 ? 2 : (ds == 0 ? 1 : 0);
    double ux = to_double(u.x), uy = to_double(u.y);
    double uu_d = ux * ux + uy * uy;
    double c0x = to_double(cfg[0].center.x), c0y = to_double(cfg[0].center.y);
    double td = (to_double(e1) / 2 - (ux * c0x + uy * c0y)) / uu_d;
    double fx = c0x + td * ux, fy = c0y + td * uy;
    double h2 = to_double(q[0]) - td * td * uu_d;
    double h = h2 > 0 ? std::sqrt(h2 / uu_d) : 0.0;
    if (out.k >= 1) out.points.push_back({fx - h * uy, fy + h * ux});
    if (out.k == 2) out.points.push_back({fx + h * uy, fy - h * ux});
    return out;
}

enum class SeparatorKind { None, Large, Strict };

inline const char* to_string(SeparatorKind k) {
    switch (k) {
        case SeparatorKind::None: return "none";
        case SeparatorKind::Large: return "large";
        case SeparatorKind::Strict: return "strict";
    }
    return "?";
}

// Which object, if any, separates the other two: one of them inside its
// disk, the other outside. Strict needs both strictly off the separator;
// Large allows tangency to the separator. Only circles can separate, and an
// object touching or crossing the candidate is never separated by it.
struct SeparatorInfo {
    SeparatorKind kind = SeparatorKind::None;
    int index = -1;
};

namespace detail {

// -2 strictly inside, -1 weakly inside, +1 weakly outside, +2 strictly
// outside, 0 mixed (crossing or touching the boundary without a side).
template <class K>
int side_of(const NormObject<K>& sep, const NormObject<K>& other) {
    using S = typename K::Scalar;
    if (K::radius_zero(other.radius)) {
        Vec2<S> d = other.center - sep.center;
        S v = dot(d, d) - K::radius_q(sep.radius);
        int s = K::sign(v, dot(d, d) + K::radius_q(sep.radius));
        return s < 0 ? -2 : (s > 0 ? 2 : 0);
    }
    PairSigns s = pair_signs<K>(sep, other);
    if (s.sminus > 0 && s.splus < 0) return 0;  // crossing
    if (s.splus >= 0) return s.splus > 0 ? 2 : 1;
    S qs = K::radius_q(sep.radius);
    S qo = K::radius_q(other.radius);
    int rq = K::sign(qs - qo, qs + qo);
    // one disk contains the other; which one is decided by the radius order
    if (rq > 0) return s.sminus < 0 ? -2 : -1;
    return s.sminus < 0 ? 2 : 1;
}

} // namespace detail

template <class K>
SeparatorInfo separator_status(const NormConfig<K>& cfg) {
    SeparatorInfo found;
    for (int i = 0; i < 3; ++i) {
        if (K::radius_zero(cfg[i].radius)) continue;
        int a = detail::side_of<K>(cfg[i], cfg[(i + 1) % 3]);
        int b = detail::side_of<K>(cfg[i], cfg[(i + 2) % 3]);
        if (a == 0 || b == 0 || (a < 0) == (b < 0)) continue;
        SeparatorKind kind =
            (a * a == 4 && b * b == 4) ? SeparatorKind::Strict : SeparatorKind::Large;
        if (found.kind != SeparatorKind::None)
            throw InternalInconsistencyError("two objects both separate the remaining pair");
        found = {kind, i};
    }
    return found;
}

// Everything the case tables key on, computed from one pass over the pairs.
struct TopoSignature {
    int zero_radius = 0;            // point objects among the normalized three
    std::array<bool, 3> is_point{};
    std::array<int, 3> pair_points{};  // common points of pairs (0,1), (0,2), (1,2)
    int tangent_pairs = 0;          // pairs meeting in exactly one point
    int double_points = 0;          // points common to all three objects
    int distinct_intersections = 0;  // distinct pairwise common points
    int tangency_points = 0;        // distinct points where some pair is tangent
    SeparatorInfo separator{};
    // one common point carrying every pairwise contact: the solution set is
    // the full pencil of circles tangent to the common line there
    bool triple_tangent = false;
};

// Index into pair_points of the unique circle-circle pair when exactly one
// object is a point: pairs are listed (0,1), (0,2), (1,2).
inline int circle_pair_index(const TopoSignature& sig) {
    if (sig.is_point[0]) return 2;
    return sig.is_point[1] ? 1 : 0;
}

template <class K>
TopoSignature topo_signature(const NormConfig<K>& cfg) {
    TopoSignature sig;
    for (int i = 0; i < 3; ++i) {
        sig.is_point[i] = K::radius_zero(cfg[i].radius);
        if (sig.is_point[i]) ++sig.zero_radius;
    }
    static constexpr int pi[3] = {0, 0, 1};
    static constexpr int pj[3] = {1, 2, 2};
    int total_pair_points = 0;
    for (int e = 0; e < 3; ++e) {
        PairSigns s = pair_signs<K>(cfg[pi[e]], cfg[pj[e]]);
        int n = pair_point_count(s);
        sig.pair_points[e] = n;
        total_pair_points += n;
        if (n == 1) ++sig.tangent_pairs;
    }
    DoublePointsInfo dp = double_points<K>(cfg);
    sig.double_points = dp.k;
    // every point shared by two pairs lies on all three objects, so each
    // double point is counted by all three pairs
    sig.distinct_intersections = total_pair_points - 2 * dp.k;
    // with a double point, every tangent contact sits on it
    sig.tangency_points = dp.k == 0 ? sig.tangent_pairs : (sig.tangent_pairs > 0 ? 1 : 0);
    sig.separator = separator_status<K>(cfg);
    sig.triple_tangent = dp.k == 1 && sig.tangent_pairs == 3;
    return sig;
}

// Expected solution count from the case tables, keyed on the signature.
// Impossible marks signature combinations no valid configuration produces
// (the blank table cells); the pipeline treats it as an internal error.
struct Expected {
    enum Kind { Finite, Infinite, Impossible } kind = Finite;
    int count = 0;

    static Expected finite(int n) { return {Finite, n}; }
    static Expected infinite() { return {Infinite, 0}; }
    static Expected impossible() { return {Impossible, 0}; }
};

inline Expected expected_count(const TopoSignature& sig) {
    if (sig.triple_tangent) return Expected::infinite();
    const int d = sig.distinct_intersections;
    const int t = sig.tangency_points;
    const int k = sig.double_points;
    switch (sig.zero_radius) {
        case 0:
            if (k == 2) return Expected::finite(2);
            if (k == 1) return Expected::finite(sig.tangent_pairs > 0 ? 3 : 5);
            if (sig.separator.kind == SeparatorKind::Strict) return Expected::finite(0);
            if (sig.separator.kind == SeparatorKind::Large) {
                if (d == 1) return Expected::finite(2);
                if (d == 2) return Expected::finite(3);
                return Expected::impossible();
            }
            if (t == 0) {
                if (d == 0) return Expected::finite(8);
                if (d == 2 || d == 4) return Expected::finite(4);
                if (d == 6) return Expected::finite(8);
                return Expected::impossible();
            }
            if (d == 1) return Expected::finite(6);
            if (d == 2) return Expected::finite(5);
            if (d == 3) return Expected::finite(t == 3 ? 5 : 4);
            if (d == 4) return Expected::finite(5);
            if (d == 5) return Expected::finite(6);
            return Expected::impossible();
        case 1:
            if (k == 1) return Expected::finite(1);  // point at a proper crossing
            if (sig.separator.kind == SeparatorKind::Strict) return Expected::finite(0);
            if (sig.pair_points[circle_pair_index(sig)] == 1) {
                // the two circles touch; the point object is elsewhere
                if (sig.separator.kind == SeparatorKind::Large)
                    return d == 1 ? Expected::finite(1) : Expected::impossible();
                if (d == 1) return Expected::finite(3);
                if (d == 2) return Expected::finite(2);
                return Expected::impossible();
            }
            if (sig.separator.kind == SeparatorKind::Large) return Expected::impossible();
            if (d == 0) return Expected::finite(4);
            if (d >= 1 && d <= 3) return Expected::finite(2);
            return Expected::impossible();
        case 2:
            if (sig.separator.kind == SeparatorKind::Strict) return Expected::finite(0);
            return Expected::finite(d >= 1 ? 1 : 2);
        case 3:
            return Expected::finite(1);
    }
    return Expected::impossible();
}

} // namespace apollo
