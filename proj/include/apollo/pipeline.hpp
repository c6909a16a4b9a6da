#pragma once

#include <vector>

#include "apollo/count.hpp"
#include "apollo/inversion.hpp"
#include "apollo/oracle.hpp"

namespace apollo {

// Exact mode decides every predicate in rational arithmetic. Float mode runs
// the same classification through the double kernel with its tolerance band
// and refuses (NumericalInstabilityError) when the banded signs disagree
// with the exact ones, so it can be fast without ever being silently wrong.
enum class Mode { Exact, Float };

struct Analysis {
    Config<Rat> input{};
    Mode mode = Mode::Exact;
    bool had_lines = false;
    NormConfig<ExactKernel> normalized{};
    TransformRecord<Rat> record{};
    TopoSignature signature{};
    Expected expected{};
    CountResult engine{};
    OracleResult oracle{};
    bool infinite = false;
    int count = 0;                          // agreed finite count
    bool agree = false;                     // tables == formula == enumeration
    std::vector<SolutionObject> solutions;  // pulled back to the input plane
};

// Rejects configurations with coincident objects.
void validate(const Config<Rat>& cfg);

// Full run: validate, eliminate lines, classify, count three ways, and
// (optionally) construct the solutions and pull them back.
Analysis analyze(const Config<Rat>& cfg, Mode mode, bool want_solutions);

} // namespace apollo
