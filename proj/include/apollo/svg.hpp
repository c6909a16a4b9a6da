#pragma once

#include <string>

#include "apollo/pipeline.hpp"

namespace apollo {

// SVG 1.1 document with the three input objects in black and every solution
// in its own stroke color. The view box follows the inputs and is extended
// toward solutions only up to a factor, so one huge solution circle cannot
// flatten the interesting region. Deterministic output.
std::string render_svg(const Analysis& a, const std::string& title = "");

} // namespace apollo
