#include "apollo/pipeline.hpp"

#include <algorithm>
#include <string>

namespace apollo {

namespace {

NormConfig<FloatKernel> to_float(const NormConfig<ExactKernel>& cfg) {
    NormConfig<FloatKernel> out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = {{to_double(cfg[i].center.x), to_double(cfg[i].center.y)},
                  to_double(cfg[i].radius)};
    return out;
}

bool same_signature(const TopoSignature& a, const TopoSignature& b) {
    return a.zero_radius == b.zero_radius && a.pair_points == b.pair_points &&
           a.tangent_pairs == b.tangent_pairs && a.double_points == b.double_points &&
           a.distinct_intersections == b.distinct_intersections &&
           a.tangency_points == b.tangency_points &&
           a.separator.kind == b.separator.kind && a.triple_tangent == b.triple_tangent;
}

} // namespace

void validate(const Config<Rat>& cfg) {
    static const char* names[3] = {"first", "second", "third"};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (coincident_objects<ExactKernel>(cfg[i], cfg[j]))
                throw CoincidentObjectsError(std::string(names[i]) + " and " + names[j] +
                                             " objects coincide");
}

Analysis analyze(const Config<Rat>& cfg, Mode mode, bool want_solutions) {
    Analysis a;
    a.input = cfg;
    a.mode = mode;
    validate(cfg);

    for (const auto& o : cfg)
        if (std::holds_alternative<LineObj<Rat>>(o)) a.had_lines = true;
    auto norm = normalize_lines<ExactKernel>(cfg);
    a.normalized = norm.objects;
    a.record = norm.record;

    a.signature = topo_signature<ExactKernel>(a.normalized);
    if (mode == Mode::Float) {
        TopoSignature preview = topo_signature<FloatKernel>(to_float(a.normalized));
        if (!same_signature(preview, a.signature))
            throw NumericalInstabilityError(
                "float tolerance band disagrees with the exact classification");
    }

    a.expected = expected_count(a.signature);
    if (a.expected.kind == Expected::Impossible)
        throw InternalInconsistencyError("signature falls in an impossible table cell");

    a.engine = apollonius_count<ExactKernel>(a.normalized);
    if (a.engine.infinite != a.signature.triple_tangent)
        throw InternalInconsistencyError("class counts and signature disagree on infinity");

    DoublePointsInfo dp = double_points<ExactKernel>(a.normalized);
    a.oracle = enumerate_solutions(oracle_input(a.normalized), dp.points,
                                   a.signature.triple_tangent);

    a.infinite = a.engine.infinite;
    if (a.infinite) {
        a.agree = a.expected.kind == Expected::Infinite && a.oracle.infinite;
    } else {
        a.count = a.engine.count;
        a.agree = a.expected.kind == Expected::Finite && a.expected.count == a.engine.count &&
                  a.oracle.count == a.engine.count;
    }

    if (want_solutions && !a.infinite) {
        a.solutions.reserve(a.oracle.solutions.size());
        for (const auto& s : a.oracle.solutions)
            a.solutions.push_back(pull_back(a.record, s));
        std::sort(a.solutions.begin(), a.solutions.end(), solution_less);
    }
    return a;
}

} // namespace apollo
