#pragma once

#include <array>
#include <string>
#include <vector>

#include "apollo/classify.hpp"

namespace apollo {

// One verified configuration with its frozen expectations. The signature
// fields describe the normalized configuration (after line elimination);
// class_rows, when pinned, are the {discriminant sign, oriented count} rows
// of the four orientation classes in the order (c1,c2,c3), (c1,-c2,c3),
// (c1,c2,-c3), (c1,-c2,-c3).
struct Fixture {
    std::string name;
    std::string cell;  // "z{points}-..." tag of the case-table cell
    Config<Rat> config;
    bool infinite = false;
    int count = -1;  // ignored when infinite
    int zero_radius = 0;
    int tangent_pairs = 0;
    int double_points = 0;
    int distinct_intersections = 0;
    SeparatorKind separator = SeparatorKind::None;
    bool has_class_rows = false;
    std::array<std::array<int, 2>, 4> class_rows{};
};

// Every case-table cell is covered: 17 three-circle cells, 10 one-point
// cells, the two-point and three-point rows, and line-bearing configurations
// that exercise the normalization for the same cells.
const std::vector<Fixture>& fixture_catalog();

// Case-table cell label of a signature, the same vocabulary the catalog uses:
// "z{points}" then the dominant feature (pencil, separator, common points,
// tangencies between round pairs) and the distinct-intersection count.
std::string cell_tag(const TopoSignature& sig);

} // namespace apollo
