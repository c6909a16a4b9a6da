#include "apollo/config_io.hpp"

#include <charconv>
#include <cctype>
#include <sstream>

#include "json.hpp"

#include "apollo/fixtures.hpp"

namespace apollo {
namespace {

using nlohmann::ordered_json;

// Field-path-aware number extraction; integers come through as-is, decimal
// fractions and rationals must be strings so nothing is rounded on the way in.
Rat field_rational(const ordered_json& entry, const char* field, const std::string& where) {
    if (!entry.contains(field))
        throw ParseError(where + "." + field + ": missing");
    const auto& v = entry[field];
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_number_unsigned()) return Rat(v.get<unsigned long long>());
    if (v.is_number_float())
        throw ParseError(where + "." + field +
                         ": write decimal fractions as strings (\"1/3\", \"0.25\") so they stay exact");
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + "." + field + ": " + e.what());
        }
    }
    throw ParseError(where + "." + field + ": expected a number or a numeric string");
}

} // namespace

ConfigFile parse_config(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("objects") || !j["objects"].is_array())
        throw ParseError("document must be an object with an \"objects\" array");
    const auto& arr = j["objects"];
    if (arr.size() != 3)
        throw ParseError("objects: expected exactly 3 entries, got " +
                         std::to_string(arr.size()));

    ConfigFile out;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& e = arr[i];
        std::string where = "objects[" + std::to_string(i) + "]";
        if (!e.is_object() || !e.contains("type") || !e["type"].is_string())
            throw ParseError(where + ": expected an object with a \"type\" string");
        std::string type = e["type"].get<std::string>();
        if (type == "circle") {
            Rat r = field_rational(e, "r", where);
            if (r <= 0)
                throw ParseError(where + ".r: circle radius must be positive"
                                 " (use type \"point\" for radius zero)");
            out.objects[i] = CircleObj<Rat>{{field_rational(e, "cx", where),
                                             field_rational(e, "cy", where)}, r};
        } else if (type == "point") {
            out.objects[i] = PointObj<Rat>{{field_rational(e, "x", where),
                                            field_rational(e, "y", where)}};
        } else if (type == "line") {
            Rat nx = field_rational(e, "nx", where);
            Rat ny = field_rational(e, "ny", where);
            if (nx == 0 && ny == 0)
                throw ParseError(where + ": line normal must be nonzero");
            out.objects[i] = canonical_line(nx, ny, field_rational(e, "d", where));
        } else {
            throw ParseError(where + ".type: unknown type \"" + type +
                             "\" (want circle, point or line)");
        }
    }

    if (j.contains("mode")) {
        if (!j["mode"].is_string())
            throw ParseError("mode: expected \"exact\" or \"float\"");
        std::string m = j["mode"].get<std::string>();
        if (m == "exact") out.mode = Mode::Exact;
        else if (m == "float") out.mode = Mode::Float;
        else throw ParseError("mode: unknown mode \"" + m + "\"");
    }

    validate(out.objects);
    return out;
}

std::string write_config(const Config<Rat>& cfg, Mode mode) {
    ordered_json j;
    j["objects"] = ordered_json::array();
    for (const auto& o : cfg) {
        ordered_json e;
        if (const auto* c = std::get_if<CircleObj<Rat>>(&o)) {
            e["type"] = "circle";
            e["cx"] = format_rat(c->center.x);
            e["cy"] = format_rat(c->center.y);
            e["r"] = format_rat(c->radius);
        } else if (const auto* p = std::get_if<PointObj<Rat>>(&o)) {
            e["type"] = "point";
            e["x"] = format_rat(p->p.x);
            e["y"] = format_rat(p->p.y);
        } else {
            const auto& l = std::get<LineObj<Rat>>(o);
            e["type"] = "line";
            e["nx"] = format_rat(l.nx);
            e["ny"] = format_rat(l.ny);
            e["d"] = format_rat(l.d);
        }
        j["objects"].push_back(std::move(e));
    }
    j["mode"] = mode == Mode::Exact ? "exact" : "float";
    return j.dump(2) + "\n";
}

std::string format_rat(const Rat& v) { return to_string(v); }

std::string format_qrad(const QRad& r) {
    if (r.m == 1 || r.c == 0) return format_rat(r.c);
    return format_rat(r.c) + "*sqrt(" + r.m.str() + ")";
}

std::string format_double(double v) {
    if (v == 0) v = 0;  // normalize -0
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

std::string format_object(const ApolloniusObject<Rat>& o) {
    if (const auto* c = std::get_if<CircleObj<Rat>>(&o))
        return "circle center=(" + format_rat(c->center.x) + ", " + format_rat(c->center.y) +
               ") radius=" + format_rat(c->radius);
    if (const auto* p = std::get_if<PointObj<Rat>>(&o))
        return "point (" + format_rat(p->p.x) + ", " + format_rat(p->p.y) + ")";
    const auto& l = std::get<LineObj<Rat>>(o);
    return "line " + format_rat(l.nx) + "*x + " + format_rat(l.ny) + "*y = " + format_rat(l.d);
}

std::string format_solution(const SolutionObject& s) {
    if (const auto* c = std::get_if<SolCircle>(&s))
        return "circle center=(" + format_double(c->cx) + ", " + format_double(c->cy) +
               ") radius=" + format_double(c->r);
    if (const auto* l = std::get_if<SolLine>(&s))
        return "line " + format_double(l->nx) + "*x + " + format_double(l->ny) +
               "*y = " + format_double(l->d);
    if (const auto* p = std::get_if<SolPoint>(&s))
        return "point (" + format_double(p->x) + ", " + format_double(p->y) + ")";
    return "ideal point";
}

std::string render_report(const Analysis& a, ReportDetail detail) {
    std::ostringstream out;
    out << "configuration:\n";
    for (int i = 0; i < 3; ++i)
        out << "  object " << i + 1 << ": " << format_object(a.input[i]) << "\n";
    out << "mode: " << (a.mode == Mode::Exact ? "exact" : "float") << "\n";

    out << "line elimination:\n";
    if (a.record.steps.empty()) {
        out << "  applied: no\n";
    } else {
        const auto& inv = a.record.steps.front();
        out << "  applied: yes\n";
        out << "  inversion center: (" << format_rat(inv.center.x) << ", "
            << format_rat(inv.center.y) << ")\n";
        out << "  inversion power: " << format_rat(inv.k2) << "\n";
        for (int i = 0; i < 3; ++i) {
            const auto& n = a.normalized[i];
            out << "  image " << i + 1 << ": ";
            if (ExactKernel::radius_zero(n.radius))
                out << "point (" << format_rat(n.center.x) << ", " << format_rat(n.center.y)
                    << ")\n";
            else
                out << "circle center=(" << format_rat(n.center.x) << ", "
                    << format_rat(n.center.y) << ") radius=" << format_qrad(n.radius) << "\n";
        }
    }

    const auto& s = a.signature;
    out << "signature:\n";
    out << "  zero radius objects: " << s.zero_radius << "\n";
    out << "  pair intersections (1-2, 1-3, 2-3): " << s.pair_points[0] << " "
        << s.pair_points[1] << " " << s.pair_points[2] << "\n";
    out << "  tangent pairs: " << s.tangent_pairs << "\n";
    out << "  common points: " << s.double_points << "\n";
    out << "  distinct intersection points: " << s.distinct_intersections << "\n";
    out << "  tangency points: " << s.tangency_points << "\n";
    out << "  separator: ";
    switch (s.separator.kind) {
        case SeparatorKind::None: out << "none\n"; break;
        case SeparatorKind::Large: out << "large(" << s.separator.index + 1 << ")\n"; break;
        case SeparatorKind::Strict: out << "strict(" << s.separator.index + 1 << ")\n"; break;
    }
    out << "  pencil of tangent circles: " << (s.triple_tangent ? "yes" : "no") << "\n";
    out << "  cell: " << cell_tag(s) << "\n";
    if (detail == ReportDetail::Signature) {
        out << "expected: " << (a.expected.kind == Expected::Kind::Infinite
                                    ? std::string("infinite")
                                    : std::to_string(a.expected.count)) << "\n";
        return out.str();
    }

    static const char* kClassNames[4] = {"(c1, c2, c3)", "(c1, -c2, c3)", "(c1, c2, -c3)",
                                         "(c1, -c2, -c3)"};
    out << "orientation classes:\n";
    for (int i = 0; i < 4; ++i) {
        const auto& c = a.engine.classes.cls[i];
        out << "  class " << kClassNames[i] << ": discriminant ";
        if (c.infinite) {
            out << "degenerate, solutions infinite\n";
        } else {
            out << (c.dsign > 0 ? "+" : c.dsign < 0 ? "-" : "0") << ", solutions "
                << c.n << "\n";
        }
    }

    auto count_or_inf = [](bool inf, int n) {
        return inf ? std::string("infinite") : std::to_string(n);
    };
    out << "counts:\n";
    out << "  table: " << count_or_inf(a.expected.kind == Expected::Kind::Infinite,
                                       a.expected.count) << "\n";
    out << "  engine: " << count_or_inf(a.engine.infinite, a.engine.count) << "\n";
    out << "  oracle: " << count_or_inf(a.oracle.infinite, a.oracle.count) << "\n";
    out << "  agreement: " << (a.agree ? "yes" : "no") << "\n";

    if (detail == ReportDetail::Solutions) {
        if (a.infinite) {
            out << "solutions: infinite\n";
        } else {
            out << "solutions:\n";
            for (std::size_t i = 0; i < a.solutions.size(); ++i)
                out << "  " << i + 1 << ": " << format_solution(a.solutions[i]) << "\n";
        }
    }
    return out.str();
}

} // namespace apollo
