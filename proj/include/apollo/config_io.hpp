#pragma once

#include <string>

#include "apollo/pipeline.hpp"

namespace apollo {

struct ConfigFile {
    Config<Rat> objects;
    Mode mode = Mode::Exact;
};

// JSON document with an "objects" array of exactly three entries
// ({"type":"circle",cx,cy,r} | {"type":"point",x,y} | {"type":"line",nx,ny,d})
// and an optional "mode": "exact" | "float". Numbers are integers or strings;
// decimal fractions must be quoted so they stay exact. Structural problems
// raise ParseError naming the field; coincident objects raise
// CoincidentObjectsError.
ConfigFile parse_config(const std::string& text);

// Serialize a configuration back to the accepted JSON form.
std::string write_config(const Config<Rat>& cfg, Mode mode);

// How much of an analysis the report shows. Signature stops after the
// classification, Counts adds the orientation classes and the three counts,
// Solutions appends the constructed solution list.
enum class ReportDetail { Signature, Counts, Solutions };

// Deterministic key/value tree for one analysis; byte-identical across runs
// for identical input. Exact values render as p/q, floats as shortest
// round-trip decimals.
std::string render_report(const Analysis& a, ReportDetail detail);

// Formatting helpers shared by the report, the CLI and the tests.
std::string format_rat(const Rat& v);
std::string format_qrad(const QRad& r);
std::string format_double(double v);
std::string format_object(const ApolloniusObject<Rat>& o);
std::string format_solution(const SolutionObject& s);

} // namespace apollo
