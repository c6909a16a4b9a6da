#include "apollo/fixtures.hpp"

namespace apollo {
namespace {

ApolloniusObject<Rat> circ(const Rat& x, const Rat& y, const Rat& r) {
    return CircleObj<Rat>{{x, y}, r};
}

ApolloniusObject<Rat> pt(const Rat& x, const Rat& y) {
    return PointObj<Rat>{{x, y}};
}

ApolloniusObject<Rat> lin(const Rat& nx, const Rat& ny, const Rat& d) {
    return canonical_line(nx, ny, d);
}

Rat fr(long n, long d) { return Rat(n) / d; }

std::array<std::array<int, 2>, 4> rows(std::array<int, 2> r0, std::array<int, 2> r1,
                                       std::array<int, 2> r2, std::array<int, 2> r3) {
    return {r0, r1, r2, r3};
}

std::vector<Fixture> build_catalog() {
    std::vector<Fixture> out;

    // Three circles, no common point, no tangency.
    out.push_back({
        .name = "strict-separator",
        .cell = "z0-strict",
        .config = {circ(0, 0, 5), circ(1, 0, 1), circ(10, 0, 1)},
        .count = 0,
        .separator = SeparatorKind::Strict,
        .has_class_rows = true,
        .class_rows = rows({-1, 0}, {-1, 0}, {-1, 0}, {-1, 0}),
    });
    out.push_back({
        .name = "disjoint-row",
        .cell = "z0-t0-d0",
        .config = {circ(0, 0, 1), circ(4, 0, 1), circ(8, 0, 1)},
        .count = 8,
        .has_class_rows = true,
        .class_rows = rows({1, 2}, {1, 2}, {1, 2}, {1, 2}),
    });
    out.push_back({
        .name = "nested-disjoint",
        .cell = "z0-t0-d0",
        .config = {circ(0, 0, 10), circ(-3, 0, 1), circ(3, 0, 1)},
        .count = 8,
        .has_class_rows = true,
        .class_rows = rows({1, 2}, {1, 2}, {1, 2}, {1, 2}),
    });
    out.push_back({
        .name = "crossing-pair-apart",
        .cell = "z0-t0-d2",
        .config = {circ(10, 0, 1), circ(0, 0, 1), circ(1, 0, 1)},
        .count = 4,
        .distinct_intersections = 2,
        .has_class_rows = true,
        .class_rows = rows({1, 2}, {-1, 0}, {-1, 0}, {1, 2}),
    });
    out.push_back({
        .name = "middle-crosses-both",
        .cell = "z0-t0-d4",
        .config = {circ(0, 0, 1), circ(fr(3, 2), 0, 1), circ(3, 0, 1)},
        .count = 4,
        .distinct_intersections = 4,
        .has_class_rows = true,
        .class_rows = rows({1, 2}, {1, 2}, {-1, 0}, {-1, 0}),
    });
    out.push_back({
        .name = "pairwise-crossing",
        .cell = "z0-t0-d6",
        .config = {circ(0, 0, 2), circ(2, 0, 2), circ(1, 2, 2)},
        .count = 8,
        .distinct_intersections = 6,
        .has_class_rows = true,
        .class_rows = rows({1, 2}, {1, 2}, {1, 2}, {1, 2}),
    });

    // Three circles with tangencies, no separator.
    out.push_back({
        .name = "tangent-pair-bystander",
        .cell = "z0-t1-d1",
        .config = {circ(10, 0, 1), circ(0, 0, 1), circ(2, 0, 1)},
        .count = 6,
        .tangent_pairs = 1,
        .distinct_intersections = 1,
        .has_class_rows = true,
        .class_rows = rows({1, 2}, {0, 1}, {0, 1}, {1, 2}),
    });
    out.push_back({
        .name = "tangent-pair-crossed-once",
        .cell = "z0-t1-d3",
        .config = {circ(0, 0, 3), circ(fr(7, 2), 0, 2), circ(fr(1, 2), 0, 1)},
        .count = 4,
        .tangent_pairs = 1,
        .distinct_intersections = 3,
        .has_class_rows = true,
        .class_rows = rows({-1, 0}, {0, 1}, {0, 1}, {1, 2}),
    });
    out.push_back({
        .name = "tangent-pair-crossed-twice",
        .cell = "z0-t1-d5",
        .config = {circ(1, fr(7, 4), fr(3, 2)), circ(0, 0, 1), circ(2, 0, 1)},
        .count = 6,
        .tangent_pairs = 1,
        .distinct_intersections = 5,
        .has_class_rows = true,
        .class_rows = rows({1, 2}, {0, 1}, {0, 1}, {1, 2}),
    });
    out.push_back({
        .name = "tangent-chain-row",
        .cell = "z0-t2-d2",
        .config = {circ(0, 0, 1), circ(2, 0, 1), circ(4, 0, 1)},
        .count = 5,
        .tangent_pairs = 2,
        .distinct_intersections = 2,
        .has_class_rows = true,
        .class_rows = rows({1, 2}, {0, 1}, {0, 1}, {0, 1}),
    });
    out.push_back({
        .name = "tangent-chain-crossing-ends",
        .cell = "z0-t2-d4",
        .config = {circ(0, 0, 1), circ(2, 0, 1), circ(fr(3, 2), 0, fr(3, 2))},
        .count = 5,
        .tangent_pairs = 2,
        .distinct_intersections = 4,
    });
    out.push_back({
        .name = "soddy-triple",
        .cell = "z0-t3-d3",
        .config = {circ(0, 0, 1), circ(2, 0, 1), circ(1, fr(4, 3), fr(2, 3))},
        .count = 5,
        .tangent_pairs = 3,
        .distinct_intersections = 3,
        .has_class_rows = true,
        .class_rows = rows({1, 2}, {0, 1}, {0, 1}, {0, 1}),
    });

    // Three circles with tangencies and a large separator.
    out.push_back({
        .name = "tangent-pair-inside-separator",
        .cell = "z0-sep-d1",
        .config = {circ(fr(-1, 2), 0, fr(1, 2)), circ(0, 0, 2), circ(3, 0, 1)},
        .count = 2,
        .tangent_pairs = 1,
        .distinct_intersections = 1,
        .separator = SeparatorKind::Large,
        .has_class_rows = true,
        .class_rows = rows({-1, 0}, {0, 1}, {0, 1}, {-1, 0}),
    });
    out.push_back({
        .name = "tangent-chain-enclosing",
        .cell = "z0-sep-d2",
        .config = {circ(3, 0, 1), circ(0, 0, 2), circ(-1, 0, 1)},
        .count = 3,
        .tangent_pairs = 2,
        .distinct_intersections = 2,
        .separator = SeparatorKind::Large,
        .has_class_rows = true,
        .class_rows = rows({0, 1}, {0, 1}, {-1, 0}, {0, 1}),
    });

    // Three circles with common points.
    out.push_back({
        .name = "radical-pencil-two-points",
        .cell = "z0-k2-d2",
        .config = {circ(0, 0, 1), circ(fr(3, 4), 0, fr(5, 4)), circ(fr(4, 3), 0, fr(5, 3))},
        .count = 2,
        .double_points = 2,
        .distinct_intersections = 2,
    });
    out.push_back({
        .name = "common-point-crossing",
        .cell = "z0-k1-d4",
        .config = {circ(1, 0, 1), circ(0, 1, 1), circ(3, 4, 5)},
        .count = 5,
        .double_points = 1,
        .distinct_intersections = 4,
    });
    out.push_back({
        .name = "common-point-with-tangency",
        .cell = "z0-k1-d3",
        .config = {circ(-1, 0, 1), circ(1, 0, 1), circ(0, -2, 2)},
        .count = 3,
        .tangent_pairs = 1,
        .double_points = 1,
        .distinct_intersections = 3,
    });
    out.push_back({
        .name = "pencil-tangent-common-point",
        .cell = "z0-inf",
        .config = {circ(0, 1, 1), circ(0, 2, 2), circ(0, 3, 3)},
        .infinite = true,
        .tangent_pairs = 3,
        .double_points = 1,
        .distinct_intersections = 1,
        .separator = SeparatorKind::Large,
    });

    // One point object.
    out.push_back({
        .name = "point-at-contact",
        .cell = "z1-inf",
        .config = {pt(0, 0), circ(0, 1, 1), circ(0, 2, 2)},
        .infinite = true,
        .zero_radius = 1,
        .tangent_pairs = 3,
        .double_points = 1,
        .distinct_intersections = 1,
    });
    out.push_back({
        .name = "point-on-crossing-pair",
        .cell = "z1-k1-d2",
        .config = {pt(0, 0), circ(1, 0, 1), circ(0, 1, 1)},
        .count = 1,
        .zero_radius = 1,
        .tangent_pairs = 2,
        .double_points = 1,
        .distinct_intersections = 2,
    });
    out.push_back({
        .name = "point-inside-separator",
        .cell = "z1-strict",
        .config = {pt(fr(1, 2), 0), circ(0, 0, 2), circ(5, 0, 1)},
        .count = 0,
        .zero_radius = 1,
        .separator = SeparatorKind::Strict,
    });
    out.push_back({
        .name = "point-outside-tangent-nest",
        .cell = "z1-sep-d1",
        .config = {pt(5, 0), circ(0, 0, 2), circ(1, 0, 1)},
        .count = 1,
        .zero_radius = 1,
        .tangent_pairs = 1,
        .distinct_intersections = 1,
        .separator = SeparatorKind::Large,
    });
    out.push_back({
        .name = "point-beside-tangent-pair",
        .cell = "z1-t1-d1",
        .config = {pt(1, 2), circ(0, 0, 1), circ(2, 0, 1)},
        .count = 3,
        .zero_radius = 1,
        .tangent_pairs = 1,
        .distinct_intersections = 1,
    });
    out.push_back({
        .name = "point-on-tangent-pair-circle",
        .cell = "z1-t1-d2",
        .config = {pt(0, 1), circ(0, 0, 1), circ(2, 0, 1)},
        .count = 2,
        .zero_radius = 1,
        .tangent_pairs = 2,
        .distinct_intersections = 2,
    });
    out.push_back({
        .name = "point-above-disjoint-circles",
        .cell = "z1-d0",
        .config = {pt(0, 3), circ(0, 0, 1), circ(fr(5, 2), 0, 1)},
        .count = 4,
        .zero_radius = 1,
    });
    out.push_back({
        .name = "point-on-lone-circle",
        .cell = "z1-d1",
        .config = {pt(0, 1), circ(0, 0, 1), circ(4, 0, 1)},
        .count = 2,
        .zero_radius = 1,
        .tangent_pairs = 1,
        .distinct_intersections = 1,
    });
    out.push_back({
        .name = "point-off-crossing-circles",
        .cell = "z1-d2",
        .config = {pt(0, 3), circ(0, 0, 1), circ(1, 0, 1)},
        .count = 2,
        .zero_radius = 1,
        .distinct_intersections = 2,
    });
    out.push_back({
        .name = "point-on-crossing-circle",
        .cell = "z1-d3",
        .config = {pt(0, 1), circ(0, 0, 1), circ(1, 0, 1)},
        .count = 2,
        .zero_radius = 1,
        .tangent_pairs = 1,
        .distinct_intersections = 3,
    });

    // Two point objects.
    out.push_back({
        .name = "circle-between-points",
        .cell = "z2-strict",
        .config = {pt(fr(1, 2), 0), pt(3, 0), circ(0, 0, 1)},
        .count = 0,
        .zero_radius = 2,
        .separator = SeparatorKind::Strict,
    });
    out.push_back({
        .name = "points-outside-circle",
        .cell = "z2-d0",
        .config = {pt(2, 0), pt(3, 0), circ(0, 0, 1)},
        .count = 2,
        .zero_radius = 2,
    });
    out.push_back({
        .name = "points-inside-circle",
        .cell = "z2-d0",
        .config = {pt(0, fr(1, 4)), pt(fr(1, 4), 0), circ(0, 0, 1)},
        .count = 2,
        .zero_radius = 2,
    });
    out.push_back({
        .name = "point-on-circle-pair",
        .cell = "z2-d1",
        .config = {pt(1, 0), pt(3, 0), circ(0, 0, 1)},
        .count = 1,
        .zero_radius = 2,
        .tangent_pairs = 1,
        .distinct_intersections = 1,
    });
    out.push_back({
        .name = "two-points-on-circle",
        .cell = "z2-d2",
        .config = {pt(1, 0), pt(-1, 0), circ(0, 0, 1)},
        .count = 1,
        .zero_radius = 2,
        .tangent_pairs = 2,
        .distinct_intersections = 2,
    });

    // Three point objects.
    out.push_back({
        .name = "triangle-points",
        .cell = "z3",
        .config = {pt(0, 0), pt(4, 0), pt(0, 4)},
        .count = 1,
        .zero_radius = 3,
    });
    out.push_back({
        .name = "collinear-points",
        .cell = "z3",
        .config = {pt(0, 0), pt(1, 0), pt(2, 0)},
        .count = 1,
        .zero_radius = 3,
    });

    // Lines; signature fields describe the configuration after line
    // elimination through an inversion.
    out.push_back({
        .name = "parallel-lines",
        .cell = "z0-inf",
        .config = {lin(0, 1, 0), lin(0, 1, 1), lin(0, 1, 2)},
        .infinite = true,
        .tangent_pairs = 3,
        .double_points = 1,
        .distinct_intersections = 1,
        .separator = SeparatorKind::Large,
    });
    out.push_back({
        .name = "triangle-lines",
        .cell = "z0-k1-d4",
        .config = {lin(1, 0, 0), lin(0, 1, 0), lin(1, 1, 4)},
        .count = 5,
        .double_points = 1,
        .distinct_intersections = 4,
    });
    out.push_back({
        .name = "line-tangent-circles",
        .cell = "z0-t2-d2",
        .config = {lin(0, 1, 0), circ(0, 1, 1), circ(4, 1, 1)},
        .count = 5,
        .tangent_pairs = 2,
        .distinct_intersections = 2,
    });
    out.push_back({
        .name = "circle-between-parallel-lines",
        .cell = "z0-t3-d3",
        .config = {lin(0, 1, 0), lin(0, 1, 2), circ(0, 1, 1)},
        .count = 5,
        .tangent_pairs = 3,
        .distinct_intersections = 3,
    });
    out.push_back({
        .name = "line-circle-point",
        .cell = "z1-t1-d1",
        .config = {lin(0, 1, 0), circ(3, 1, 1), pt(0, 2)},
        .count = 3,
        .zero_radius = 1,
        .tangent_pairs = 1,
        .distinct_intersections = 1,
    });
    out.push_back({
        .name = "point-between-parallel-lines",
        .cell = "z1-t1-d1",
        .config = {lin(0, 1, 0), lin(0, 1, 2), pt(0, 1)},
        .count = 3,
        .zero_radius = 1,
        .tangent_pairs = 1,
        .distinct_intersections = 1,
    });
    out.push_back({
        .name = "points-astride-line",
        .cell = "z2-strict",
        .config = {lin(0, 1, 0), pt(0, 1), pt(0, -1)},
        .count = 0,
        .zero_radius = 2,
        .separator = SeparatorKind::Strict,
    });
    out.push_back({
        .name = "points-beside-line",
        .cell = "z2-d0",
        .config = {lin(0, 1, 0), pt(0, 1), pt(0, 4)},
        .count = 2,
        .zero_radius = 2,
    });

    return out;
}

} // namespace

const std::vector<Fixture>& fixture_catalog() {
    static const std::vector<Fixture> catalog = build_catalog();
    return catalog;
}

std::string cell_tag(const TopoSignature& sig) {
    std::string tag = "z" + std::to_string(sig.zero_radius);
    if (sig.zero_radius == 3) return tag;
    if (sig.triple_tangent) return tag + "-inf";
    if (sig.separator.kind == SeparatorKind::Strict) return tag + "-strict";
    std::string d = "-d" + std::to_string(sig.distinct_intersections);
    if (sig.separator.kind == SeparatorKind::Large) return tag + "-sep" + d;
    if (sig.double_points > 0)
        return tag + "-k" + std::to_string(sig.double_points) + d;
    // Tangencies between two positive-radius objects index the sub-table;
    // a point sitting on a circle only shows up in the intersection count.
    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    int t = 0;
    for (int p = 0; p < 3; ++p)
        if (sig.pair_points[p] == 1 && !sig.is_point[pairs[p][0]] && !sig.is_point[pairs[p][1]])
            ++t;
    if (t > 0 || sig.zero_radius == 0) tag += "-t" + std::to_string(t);
    return tag + d;
}

} // namespace apollo
