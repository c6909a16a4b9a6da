#pragma once

#include <cstdint>
#include <vector>

#include "apollo/errors.hpp"
#include "apollo/objects.hpp"

namespace apollo {

// Circle inversion x -> p + k2*(x-p)/|x-p|^2 with center p and power k2 > 0.
template <class S>
struct Inversion {
    Vec2<S> center{};
    S k2{};
};

template <class S>
Vec2<S> invert_point(const Inversion<S>& inv, const Vec2<S>& q) {
    Vec2<S> d = q - inv.center;
    S d2 = dot(d, d);
    if (d2 == 0) throw CenterIncidentError("cannot invert the inversion center");
    return inv.center + (inv.k2 / d2) * d;
}

// Image of an oriented circle. With s = k2 / (|x-p|^2 - r^2) the image has
// center p + s*(x-p) and signed radius -r*s: the sign flip encodes that
// inversion reverses the orientation of circles not containing the center
// and preserves it for circles that do (s < 0 there). Zero radius reduces to
// plain point inversion.
template <class K>
OrientedCircle<typename K::Scalar> oriented_image(const Inversion<typename K::Scalar>& inv,
                                                  const OrientedCircle<typename K::Scalar>& c) {
    using S = typename K::Scalar;
    Vec2<S> d = c.center - inv.center;
    S d2 = dot(d, d);
    S r2 = c.r * c.r;
    if (K::sign(d2 - r2, d2 + r2) == 0)
        throw CenterIncidentError("inversion center lies on the circle");
    S s = inv.k2 / (d2 - r2);
    return {inv.center + s * d, S(-c.r * s)};
}

namespace detail {

inline bool perfect_square(const BigInt& m, BigInt& root) {
    if (m < 0) return false;
    root = boost::multiprecision::sqrt(m);
    return root * root == m;
}

} // namespace detail

// Image of an unoriented input object. Lines through the center map to
// themselves; other lines map to a circle through the center; a circle
// through the center would map to a line, which the center choice below
// rules out, so that case throws. For exact scalars a line image whose
// radius is irrational (normal not a Pythagorean pair) cannot be expressed
// as an exact circle object; the normalization pipeline avoids this by
// carrying such radii in quadratic form, and this object-level helper
// throws instead.
template <class K>
ApolloniusObject<typename K::Scalar> invert_object(const Inversion<typename K::Scalar>& inv,
                                                   const ApolloniusObject<typename K::Scalar>& o) {
    using S = typename K::Scalar;
    if (auto* p = std::get_if<PointObj<S>>(&o)) {
        return PointObj<S>{invert_point(inv, p->p)};
    }
    if (auto* c = std::get_if<CircleObj<S>>(&o)) {
        Vec2<S> d = c->center - inv.center;
        S d2 = dot(d, d);
        S r2 = c->radius * c->radius;
        if (K::sign(d2 - r2, d2 + r2) == 0)
            throw CenterIncidentError("inversion center lies on the circle");
        S s = inv.k2 / (d2 - r2);
        return CircleObj<S>{inv.center + s * d, abs_s(s) * c->radius};
    }
    auto& l = std::get<LineObj<S>>(o);
    S h = l.d - (l.nx * inv.center.x + l.ny * inv.center.y);
    S hscale = abs_s(l.d) + abs_s(l.nx * inv.center.x) + abs_s(l.ny * inv.center.y);
    if (K::sign(h, hscale) == 0) return o;  // line through the center is fixed
    S f = inv.k2 / (2 * h);
    Vec2<S> center = inv.center + f * Vec2<S>{l.nx, l.ny};
    S m = l.nx * l.nx + l.ny * l.ny;
    if constexpr (K::is_exact) {
        // canonical exact lines have integer normals, so m is an integer
        BigInt root;
        if (!detail::perfect_square(numerator(m), root))
            throw Error("line image has irrational radius; use the normalization pipeline");
        return CircleObj<S>{center, abs_s(f) * S(root)};
    } else {
        return CircleObj<S>{center, std::fabs(f) * std::sqrt(m)};
    }
}

// Smallest admissible inversion center: not incident with any input object,
// chosen deterministically by enumerating rational points (a/q, b/q) ordered
// by denominator q, then |.|^2, then b descending, then a ascending. Reduced
// fractions only; unreduced pairs repeat an earlier candidate.
template <class K>
Vec2<typename K::Scalar> choose_inversion_center(const Config<typename K::Scalar>& cfg) {
    using S = typename K::Scalar;
    auto admissible = [&](const Vec2<S>& p) {
        for (const auto& o : cfg)
            if (point_on_object<K>(p, o)) return false;
        return true;
    };
    for (std::int64_t q = 1; q <= 8; ++q) {
        for (std::int64_t rr = 0; rr <= 400; ++rr) {
            // all (a, b) with a^2 + b^2 == rr, b descending then a ascending
            std::int64_t lim = 0;
            while ((lim + 1) * (lim + 1) <= rr) ++lim;
            for (std::int64_t b = lim; b >= -lim; --b) {
                std::int64_t a2 = rr - b * b;
                std::int64_t ar = 0;
                while ((ar + 1) * (ar + 1) <= a2) ++ar;
                if (ar * ar != a2) continue;
                std::int64_t lo = -ar;
                for (std::int64_t a = lo; a <= ar; a += (ar == 0 ? 1 : 2 * ar)) {
                    std::int64_t g = std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), q);
                    if (g != 1) continue;
                    Vec2<S> p{S(a) / S(q), S(b) / S(q)};
                    if (admissible(p)) return p;
                }
            }
        }
    }
    throw InternalInconsistencyError("no admissible inversion center found");
}

// The inversions applied during normalization, in application order.
// Solutions of the normalized configuration are pulled back through the
// same maps in reverse (each inversion is an involution).
template <class S>
struct TransformRecord {
    std::vector<Inversion<S>> steps;
};

template <class K>
struct NormalizeResult {
    NormConfig<K> objects;
    TransformRecord<typename K::Scalar> record;
};

namespace detail {

// Point/circle image in normalized form; lines become circles through the
// inversion center with radius |k2/2h| * sqrt(nx^2+ny^2) kept in quadratic
// form for the exact kernel.
template <class K>
NormObject<K> norm_image(const Inversion<typename K::Scalar>& inv,
                         const ApolloniusObject<typename K::Scalar>& o) {
    using S = typename K::Scalar;
    if (auto* p = std::get_if<PointObj<S>>(&o)) {
        return {invert_point(inv, p->p), K::radius_from(S(0))};
    }
    if (auto* c = std::get_if<CircleObj<S>>(&o)) {
        Vec2<S> d = c->center - inv.center;
        S d2 = dot(d, d);
        S r2 = c->radius * c->radius;
        if (K::sign(d2 - r2, d2 + r2) == 0)
            throw CenterIncidentError("inversion center lies on the circle");
        S s = inv.k2 / (d2 - r2);
        return {inv.center + s * d, K::radius_from(abs_s(s) * c->radius)};
    }
    auto& l = std::get<LineObj<S>>(o);
    S h = l.d - (l.nx * inv.center.x + l.ny * inv.center.y);
    if (h == 0) throw CenterIncidentError("inversion center lies on the line");
    S f = inv.k2 / (2 * h);
    Vec2<S> center = inv.center + f * Vec2<S>{l.nx, l.ny};
    if constexpr (K::is_exact) {
        return {center, QRad{abs_of(f), numerator(l.nx * l.nx + l.ny * l.ny)}};
    } else {
        return {center, std::fabs(f) * std::sqrt(l.nx * l.nx + l.ny * l.ny)};
    }
}

} // namespace detail

// Replace every line by its inverse circle. Configurations without lines
// pass through unchanged with an empty record. Counts computed afterwards
// are counts in the inversive plane: a solution through the inversion
// center corresponds to a line, and a degenerate point at the center
// corresponds to the point at infinity.
template <class K>
NormalizeResult<K> normalize_lines(const Config<typename K::Scalar>& cfg) {
    using S = typename K::Scalar;
    NormalizeResult<K> out;
    bool has_line = false;
    for (const auto& o : cfg)
        if (std::holds_alternative<LineObj<S>>(o)) has_line = true;
    if (!has_line) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (auto* p = std::get_if<PointObj<S>>(&cfg[i]))
                out.objects[i] = {p->p, K::radius_from(S(0))};
            else {
                auto& c = std::get<CircleObj<S>>(cfg[i]);
                out.objects[i] = {c.center, K::radius_from(c.radius)};
            }
        }
        return out;
    }
    Inversion<S> inv{choose_inversion_center<K>(cfg), S(1)};
    for (std::size_t i = 0; i < 3; ++i) out.objects[i] = detail::norm_image<K>(inv, cfg[i]);
    out.record.steps.push_back(inv);
    return out;
}

// Pull a numerically constructed solution back through the recorded
// inversions (reverse order). A solution circle through a step's center maps
// to a line, a line through the center stays a line, the center itself maps
// to the point at infinity and vice versa. Incidence with the center is
// decided inside the float band.
template <class S>
SolutionObject pull_back(const TransformRecord<S>& rec, SolutionObject sol) {
    for (auto it = rec.steps.rbegin(); it != rec.steps.rend(); ++it) {
        double px = to_double(it->center.x);
        double py = to_double(it->center.y);
        double k2 = to_double(it->k2);
        if (auto* c = std::get_if<SolCircle>(&sol)) {
            double dx = c->cx - px, dy = c->cy - py;
            double d2 = dx * dx + dy * dy;
            double r2 = c->r * c->r;
            if (FloatKernel::sign(d2 - r2, d2 + r2) == 0) {
                double d = std::sqrt(d2);
                double nx = dx / d, ny = dy / d;
                double delta = nx * px + ny * py + k2 / (2 * d);
                auto l = canonical_line(nx, ny, delta);
                sol = SolLine{l.nx, l.ny, l.d};
            } else {
                double s = k2 / (d2 - r2);
                sol = SolCircle{px + s * dx, py + s * dy, std::fabs(s) * c->r};
            }
        } else if (auto* l = std::get_if<SolLine>(&sol)) {
            double h = l->d - (l->nx * px + l->ny * py);
            double hscale = std::fabs(l->d) + std::fabs(l->nx * px) + std::fabs(l->ny * py);
            if (FloatKernel::sign(h, hscale) != 0) {
                double f = k2 / (2 * h);
                sol = SolCircle{px + f * l->nx, py + f * l->ny, std::fabs(f)};
            }
        } else if (auto* p = std::get_if<SolPoint>(&sol)) {
            double dx = p->x - px, dy = p->y - py;
            double d2 = dx * dx + dy * dy;
            if (FloatKernel::sign(d2, px * px + py * py + p->x * p->x + p->y * p->y + 1.0) == 0) {
                sol = SolIdealPoint{};
            } else {
                double s = k2 / d2;
                sol = SolPoint{px + s * dx, py + s * dy};
            }
        } else {
            sol = SolPoint{px, py};
        }
    }
    return sol;
}

} // namespace apollo
