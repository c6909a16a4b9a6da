#pragma once

#include "apollo/classify.hpp"

namespace apollo {

// Product of the three pairwise powers. Its sign alone decides the oriented
// problem, so prefer oriented_solution_count; the raw value is exposed for
// inspection and tests.
template <class S>
S discriminant(const OrientedCircle<S>& c1, const OrientedCircle<S>& c2,
               const OrientedCircle<S>& c3) {
    return power(c1, c2) * power(c1, c3) * power(c2, c3);
}

// Number of circles tangent to all three with matching orientation:
// 2, 1 or 0 as the discriminant is positive, zero or negative. The sign is
// taken as the product of the three factor signs, never from the product
// value. All three factors zero means mutual tangency at one point and an
// infinite pencil of solutions.
template <class K>
int oriented_solution_count(const OrientedCircle<typename K::Scalar>& c1,
                            const OrientedCircle<typename K::Scalar>& c2,
                            const OrientedCircle<typename K::Scalar>& c3) {
    if (coincident_unoriented<K>(c1, c2) || coincident_unoriented<K>(c1, c3) ||
        coincident_unoriented<K>(c2, c3))
        throw CoincidentObjectsError("oriented count on coincident circles");
    int s12 = power_sign<K>(c1, c2);
    int s13 = power_sign<K>(c1, c3);
    int s23 = power_sign<K>(c2, c3);
    if (s12 == 0 && s13 == 0 && s23 == 0)
        throw TripleTangentError("mutually tangent at one point: infinite pencil");
    int d = s12 * s13 * s23;
    return d > 0 ? 2 : (d == 0 ? 1 : 0);
}

// Outcome of one orientation class: discriminant sign and solution count.
struct ClassOutcome {
    int dsign = 0;
    int n = 0;
    bool infinite = false;
};

// The four orientation classes of an unoriented triple, modulo reversing all
// three: (c1,c2,c3), (c1,-c2,c3), (c1,c2,-c3), (c1,-c2,-c3), in this order.
struct ClassCounts {
    std::array<ClassOutcome, 4> cls{};

    int total() const {
        int s = 0;
        for (const auto& c : cls) s += c.n;
        return s;
    }
    bool any_infinite() const {
        for (const auto& c : cls)
            if (c.infinite) return true;
        return false;
    }
};

namespace detail {

inline ClassOutcome class_outcome(int f12, int f13, int f23) {
    if (f12 == 0 && f13 == 0 && f23 == 0) return {0, 0, true};
    int d = f12 * f13 * f23;
    return {d, d > 0 ? 2 : (d == 0 ? 1 : 0), false};
}

} // namespace detail

// Per-class counts for a normalized (unsigned) triple: the given orientation
// takes every radius positive, and the factor of a pair flips between the
// two tangency signs with the relative orientation.
template <class K>
ClassCounts per_class_counts(const NormConfig<K>& cfg) {
    PairSigns s12 = pair_signs<K>(cfg[0], cfg[1]);
    PairSigns s13 = pair_signs<K>(cfg[0], cfg[2]);
    PairSigns s23 = pair_signs<K>(cfg[1], cfg[2]);
    ClassCounts out;
    out.cls[0] = detail::class_outcome(s12.sminus, s13.sminus, s23.sminus);
    out.cls[1] = detail::class_outcome(s12.splus, s13.sminus, s23.splus);
    out.cls[2] = detail::class_outcome(s12.sminus, s13.splus, s23.splus);
    out.cls[3] = detail::class_outcome(s12.splus, s13.splus, s23.sminus);
    return out;
}

// Same classes for explicitly oriented circles (signed radii as given).
template <class K>
ClassCounts per_class_counts(const std::array<OrientedCircle<typename K::Scalar>, 3>& c) {
    int s12 = power_sign<K>(c[0], c[1]);
    int s12f = power_sign<K>(c[0], reverse(c[1]));
    int s13 = power_sign<K>(c[0], c[2]);
    int s13f = power_sign<K>(c[0], reverse(c[2]));
    int s23 = power_sign<K>(c[1], c[2]);
    int s23f = power_sign<K>(c[1], reverse(c[2]));
    ClassCounts out;
    out.cls[0] = detail::class_outcome(s12, s13, s23);
    out.cls[1] = detail::class_outcome(s12f, s13, s23f);
    out.cls[2] = detail::class_outcome(s12, s13f, s23f);
    out.cls[3] = detail::class_outcome(s12f, s13f, s23);
    return out;
}

// Solution count of the unoriented problem for a normalized configuration.
struct CountResult {
    bool infinite = false;
    int count = 0;
    ClassCounts classes{};
    int zero_radius = 0;
    int double_points = 0;
};

// Sum the four class counts, then correct for degeneracy:
//  - a zero radius makes an orientation flip a no-op, so the class sum
//    counts every solution 2^z times;
//  - a point common to all three objects is a degenerate solution that every
//    class counts once, but it is one solution, not 4/2^z.
// total = sum/2^z - k*(4/2^z - 1). The division is exact; a remainder means
// the class counts are inconsistent, which is a bug, not an input error.
template <class K>
CountResult apollonius_count(const NormConfig<K>& cfg) {
    CountResult res;
    for (const auto& o : cfg)
        if (K::radius_zero(o.radius)) ++res.zero_radius;
    res.classes = per_class_counts<K>(cfg);
    if (res.classes.any_infinite()) {
        res.infinite = true;
        return res;
    }
    DoublePointsInfo dp = double_points<K>(cfg);
    res.double_points = dp.k;
    int div = 1 << res.zero_radius;
    int sum = res.classes.total();
    if (sum % div != 0)
        throw InternalInconsistencyError("class counts not divisible by the collapse factor");
    if (dp.k > 0 && res.zero_radius >= 2)
        throw InternalInconsistencyError("distinct point objects cannot share a double point");
    res.count = sum / div - dp.k * (4 / div - 1);
    if (res.count < 0 || res.count > 8)
        throw InternalInconsistencyError("solution count out of range");
    return res;
}

} // namespace apollo
