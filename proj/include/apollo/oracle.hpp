#pragma once

#include <array>
#include <vector>

#include "apollo/classify.hpp"

namespace apollo {

// Float-space view of a normalized object for the algebraic solver. The
// solver is a checker built from plain double arithmetic; exact decisions
// stay in the classifier, which also owns infinity detection and the
// degenerate point solutions injected into the enumeration.
struct OracleObject {
    double x = 0;
    double y = 0;
    double r = 0;  // unsigned; 0 = point
};

using OracleTriple = std::array<OracleObject, 3>;

template <class K>
OracleTriple oracle_input(const NormConfig<K>& cfg) {
    OracleTriple t;
    for (std::size_t i = 0; i < 3; ++i)
        t[i] = {to_double(cfg[i].center.x), to_double(cfg[i].center.y),
                to_double(cfg[i].radius)};
    return t;
}

// Tangency defect of a candidate solution against one object, minimized over
// the internal/external contact sign; 0 means tangent (or incident).
double residual(const SolutionObject& s, const OracleObject& obj);

// All circles (x,y,rho), rho >= 0, with distance to center i equal to
// |rho + signs[i]*r_i| for each i: the linear pair difference leaves a line
// in (x,y,rho) whose intersection with the remaining quadratic gives at most
// two candidates; each is Newton-polished and residual-gated.
std::vector<SolutionObject> solve_sign_system(const OracleTriple& objs,
                                              const std::array<int, 3>& signs);

// All lines tangent to the three objects (through them, for points),
// enumerated over the 8 tangency sign systems and deduplicated unoriented.
std::vector<SolutionObject> common_tangent_lines(const OracleTriple& objs);

struct OracleResult {
    bool infinite = false;
    int count = 0;
    std::vector<SolutionObject> solutions;
};

// Full enumeration: 8 sign systems, tangent lines, plus the injected double
// points (exact classifier data; near-zero-radius recoveries of the same
// points are suppressed). exact_infinite short-circuits the enumeration:
// infinity is decided by the exact triple-tangency predicate, never here.
OracleResult enumerate_solutions(const OracleTriple& objs,
                                 const std::vector<std::array<double, 2>>& inject_points,
                                 bool exact_infinite);

// Common oriented tangent lines of two signed circles: n.x - d = r with
// unit n, oriented (a line and its reversal are distinct).
std::vector<SolLine> oriented_tangent_lines(const std::array<double, 3>& c1,
                                            const std::array<double, 3>& c2);

} // namespace apollo
