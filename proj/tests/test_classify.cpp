#include "doctest.h"

#include <random>

#include "apollo/fixtures.hpp"
#include "apollo/pipeline.hpp"
#include "apollo/random_config.hpp"

using namespace apollo;

namespace {

NormObject<ExactKernel> nc(long x, long y, long r) {
    return {{Rat(x), Rat(y)}, qrad_from(Rat(r))};
}

NormObject<ExactKernel> np(long x, long y) { return {{Rat(x), Rat(y)}, qrad_from(Rat(0))}; }

} // namespace

TEST_CASE("pair signs split the four relations") {
    auto s = pair_signs<ExactKernel>(nc(0, 0, 1), nc(4, 0, 1));
    CHECK(s.sminus == 1);
    CHECK(s.splus == 1);  // disjoint outside
    s = pair_signs<ExactKernel>(nc(0, 0, 1), nc(1, 0, 1));
    CHECK(s.sminus == 1);
    CHECK(s.splus == -1);  // crossing
    s = pair_signs<ExactKernel>(nc(0, 0, 3), nc(1, 0, 1));
    CHECK(s.sminus == -1);
    CHECK(s.splus == -1);  // nested
    s = pair_signs<ExactKernel>(nc(0, 0, 1), nc(2, 0, 1));
    CHECK(s.sminus == 1);
    CHECK(s.splus == 0);  // external tangency
    s = pair_signs<ExactKernel>(nc(0, 0, 2), nc(1, 0, 1));
    CHECK(s.sminus == 0);
    CHECK(s.splus == -1);  // internal tangency

    // zero radius collapses both signs to on/off the other object
    s = pair_signs<ExactKernel>(np(1, 0), nc(0, 0, 1));
    CHECK(s.sminus == 0);
    CHECK(s.splus == 0);
    CHECK(pair_point_count(s) == 1);
    s = pair_signs<ExactKernel>(np(3, 0), nc(0, 0, 1));
    CHECK(s.sminus == 1);
    CHECK(s.splus == 1);
    CHECK(pair_point_count(s) == 0);
}

TEST_CASE("surd radii from line images classify exactly") {
    // the normal of x + y = 4 has irrational length, so the image of the
    // line under normalization is a circle whose radius is a surd; incidence
    // decisions against it must still be exact
    Config<Rat> cfg{canonical_line(Rat(1), Rat(1), Rat(4)),
                    CircleObj<Rat>{{Rat(0), Rat(0)}, Rat(1)},
                    PointObj<Rat>{{Rat(0), Rat(4)}}};
    auto norm = normalize_lines<ExactKernel>(cfg);
    REQUIRE(norm.objects[0].radius.m == 2);
    auto sig = topo_signature<ExactKernel>(norm.objects);
    CHECK(sig.zero_radius == 1);
    CHECK(sig.pair_points[0] == 0);  // line misses the circle (distance 2*sqrt(2) > 1)
    CHECK(sig.pair_points[1] == 1);  // the point stays on the line image
    CHECK(sig.pair_points[2] == 0);
    CHECK(sig.distinct_intersections == 1);
}

TEST_CASE("double points of three round objects") {
    // coaxial pencil through (0,1) and (0,-1)
    NormConfig<ExactKernel> pencil{nc(0, 0, 1), {{Rat(3, 4), Rat(0)}, qrad_from(Rat(5, 4))},
                                   {{Rat(4, 3), Rat(0)}, qrad_from(Rat(5, 3))}};
    auto dp = double_points<ExactKernel>(pencil);
    CHECK(dp.k == 2);
    REQUIRE(dp.points.size() == 2);
    CHECK(dp.points[0][0] == doctest::Approx(0));
    CHECK(std::fabs(dp.points[0][1]) == doctest::Approx(1));

    // radical center on all three circles
    NormConfig<ExactKernel> common{nc(1, 0, 1), nc(0, 1, 1), {{Rat(3), Rat(4)}, qrad_from(Rat(5))}};
    dp = double_points<ExactKernel>(common);
    CHECK(dp.k == 1);
    REQUIRE(dp.points.size() == 1);
    CHECK(dp.points[0][0] == doctest::Approx(0));
    CHECK(dp.points[0][1] == doctest::Approx(0));

    // generic triple: radical center off the circles
    NormConfig<ExactKernel> generic{nc(0, 0, 1), nc(4, 0, 1), nc(8, 0, 1)};
    CHECK(double_points<ExactKernel>(generic).k == 0);

    // a point object shares a common point only by sitting on both circles
    NormConfig<ExactKernel> with_point{np(1, 0), nc(0, 0, 1), nc(2, 0, 1)};
    dp = double_points<ExactKernel>(with_point);
    CHECK(dp.k == 1);
    NormConfig<ExactKernel> two_points{np(1, 0), np(3, 0), nc(0, 0, 1)};
    CHECK(double_points<ExactKernel>(two_points).k == 0);
}

TEST_CASE("separator detection") {
    // r = 5 circle holds the small circle inside, away from the far one
    NormConfig<ExactKernel> strict{nc(0, 0, 5), nc(1, 0, 1), nc(10, 0, 1)};
    auto sep = separator_status<ExactKernel>(strict);
    CHECK(sep.kind == SeparatorKind::Strict);
    CHECK(sep.index == 0);

    // tangency to the separator weakens it
    NormConfig<ExactKernel> large{
        NormObject<ExactKernel>{{Rat(-1, 2), Rat(0)}, qrad_from(Rat(1, 2))}, nc(0, 0, 2),
        nc(3, 0, 1)};
    sep = separator_status<ExactKernel>(large);
    CHECK(sep.kind == SeparatorKind::Large);
    CHECK(sep.index == 1);

    NormConfig<ExactKernel> none{nc(0, 0, 1), nc(4, 0, 1), nc(8, 0, 1)};
    CHECK(separator_status<ExactKernel>(none).kind == SeparatorKind::None);
}

TEST_CASE("separators are unique over random configurations") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pts(0, 2);
    for (int i = 0; i < 2000; ++i) {
        auto cfg = random_config(rng, pts(rng));
        auto norm = normalize_lines<ExactKernel>(cfg);
        // separator_status throws if two objects both separate; reaching the
        // return is the property
        auto sep = separator_status<ExactKernel>(norm.objects);
        if (sep.kind != SeparatorKind::None) {
            CHECK(sep.index >= 0);
            CHECK(sep.index < 3);
            CHECK_FALSE(ExactKernel::radius_zero(norm.objects[sep.index].radius));
        }
    }
}

TEST_CASE("catalog fixtures carry their frozen signatures") {
    for (const auto& f : fixture_catalog()) {
        CAPTURE(f.name);
        Analysis a = analyze(f.config, Mode::Exact, false);
        const auto& s = a.signature;
        CHECK(s.zero_radius == f.zero_radius);
        CHECK(s.tangent_pairs == f.tangent_pairs);
        CHECK(s.double_points == f.double_points);
        CHECK(s.distinct_intersections == f.distinct_intersections);
        CHECK(s.separator.kind == f.separator);
        CHECK(cell_tag(s) == f.cell);
        if (f.infinite) {
            CHECK(a.expected.kind == Expected::Infinite);
            CHECK(s.triple_tangent);
        } else {
            CHECK(a.expected.kind == Expected::Finite);
            CHECK(a.expected.count == f.count);
        }
    }
}

TEST_CASE("expected count is defined on every reachable signature") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> pts(0, 3);
    for (int i = 0; i < 3000; ++i) {
        auto cfg = random_config(rng, pts(rng));
        auto norm = normalize_lines<ExactKernel>(cfg);
        auto sig = topo_signature<ExactKernel>(norm.objects);
        CHECK(expected_count(sig).kind != Expected::Impossible);
    }
    for (const auto& f : fixture_catalog()) {
        auto norm = normalize_lines<ExactKernel>(f.config);
        auto sig = topo_signature<ExactKernel>(norm.objects);
        CHECK(expected_count(sig).kind != Expected::Impossible);
    }
}

TEST_CASE("circle pair index picks the round pair") {
    TopoSignature sig;
    sig.is_point = {true, false, false};
    CHECK(circle_pair_index(sig) == 2);
    sig.is_point = {false, true, false};
    CHECK(circle_pair_index(sig) == 1);
    sig.is_point = {false, false, true};
    CHECK(circle_pair_index(sig) == 0);
}
