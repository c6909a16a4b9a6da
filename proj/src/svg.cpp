#include "apollo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "apollo/config_io.hpp"
#include "apollo/oracle.hpp"

namespace apollo {
namespace {

struct Box {
    double minx = 0, miny = 0, maxx = 0, maxy = 0;
    bool any = false;

    void add(double x, double y) {
        if (!any) {
            minx = maxx = x;
            miny = maxy = y;
            any = true;
            return;
        }
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }

    void add_circle(double x, double y, double r) {
        add(x - r, y - r);
        add(x + r, y + r);
    }
};

// SVG y grows downward; geometry y grows upward. Emit flipped y throughout.
std::string num(double v) { return format_double(v); }

// Cosmetic quantities (viewport, stroke widths, font size) do not need the
// round-trip precision of num() and read better short.
std::string cnum(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v == 0 ? 0.0 : v);
    return buf;
}

void emit_circle(std::ostringstream& out, double x, double y, double r, const char* color,
                 double sw) {
    out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(-y) << "\" r=\"" << num(r)
        << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << cnum(sw) << "\"/>\n";
}

void emit_dot(std::ostringstream& out, double x, double y, double r, const char* color) {
    out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(-y) << "\" r=\"" << cnum(r)
        << "\" fill=\"" << color << "\" stroke=\"none\"/>\n";
}

void emit_line(std::ostringstream& out, double nx, double ny, double d, const Box& box,
               const char* color, double sw) {
    // Segment through the closest point to the box center, long enough to
    // cross the whole box in the direction (-ny, nx).
    double cx = (box.minx + box.maxx) / 2, cy = (box.miny + box.maxy) / 2;
    double t = d - (nx * cx + ny * cy);
    double fx = cx + t * nx, fy = cy + t * ny;
    double len = std::hypot(box.maxx - box.minx, box.maxy - box.miny) + 2 * std::fabs(t);
    double x1 = fx - len * ny, y1 = fy + len * nx;
    double x2 = fx + len * ny, y2 = fy - len * nx;
    out << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(-y1) << "\" x2=\"" << num(x2)
        << "\" y2=\"" << num(-y2) << "\" stroke=\"" << color << "\" stroke-width=\""
        << cnum(sw) << "\"/>\n";
}

const char* kPalette[8] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                           "#ff7f00", "#a65628", "#f781bf", "#17becf"};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '&') out += "&amp;";
        else if (ch == '<') out += "&lt;";
        else if (ch == '>') out += "&gt;";
        else out += ch;
    }
    return out;
}

} // namespace

std::string render_svg(const Analysis& a, const std::string& title) {
    // Input bounds first; they define the scale of the scene.
    Box inputs;
    for (const auto& o : a.input) {
        if (const auto* c = std::get_if<CircleObj<Rat>>(&o))
            inputs.add_circle(to_double(c->center.x), to_double(c->center.y),
                              to_double(c->radius));
        else if (const auto* p = std::get_if<PointObj<Rat>>(&o))
            inputs.add(to_double(p->p.x), to_double(p->p.y));
        else {
            // A line is unbounded; anchor the view at its foot point from the
            // origin so parallel pencils still spread the box.
            const auto& l = std::get<LineObj<Rat>>(o);
            double nx = to_double(l.nx), ny = to_double(l.ny), d = to_double(l.d);
            double q = nx * nx + ny * ny;
            inputs.add(d * nx / q, d * ny / q);
        }
    }
    double extent = std::max({inputs.maxx - inputs.minx, inputs.maxy - inputs.miny, 1.0});

    // Solutions may extend the view, but never beyond 2x the input extent.
    Box view = inputs;
    for (const auto& s : a.solutions) {
        Box b = view;
        if (const auto* c = std::get_if<SolCircle>(&s))
            b.add_circle(c->cx, c->cy, c->r);
        else if (const auto* p = std::get_if<SolPoint>(&s))
            b.add(p->x, p->y);
        if (b.maxx - b.minx <= 3 * extent && b.maxy - b.miny <= 3 * extent) view = b;
    }
    double pad = 0.15 * std::max(view.maxx - view.minx, view.maxy - view.miny) + 0.05 * extent;
    view.add(view.minx - pad, view.miny - pad);
    view.add(view.maxx + pad, view.maxy + pad);

    // Keep the box from getting too slim; the viewport is square.
    double w = view.maxx - view.minx, h = view.maxy - view.miny;
    if (w < h / 2) {
        double grow = (h / 2 - w) / 2;
        view.add(view.minx - grow, view.miny);
        view.add(view.maxx + grow, view.maxy);
    } else if (h < w / 2) {
        double grow = (w / 2 - h) / 2;
        view.add(view.minx, view.miny - grow);
        view.add(view.maxx, view.maxy + grow);
    }
    w = view.maxx - view.minx;
    h = view.maxy - view.miny;
    double sw_in = 0.008 * std::max(w, h);
    double sw_sol = 0.005 * std::max(w, h);
    double dot = 0.012 * std::max(w, h);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"640\" height=\"640\" viewBox=\"" << cnum(view.minx) << " "
        << cnum(-view.maxy) << " " << cnum(w) << " " << cnum(h) << "\">\n";
    if (!title.empty())
        out << "  <title>" << xml_escape(title) << "</title>\n";
    out << "  <rect x=\"" << cnum(view.minx) << "\" y=\"" << cnum(-view.maxy) << "\" width=\""
        << cnum(w) << "\" height=\"" << cnum(h) << "\" fill=\"#ffffff\"/>\n";

    int idx = 0;
    for (const auto& s : a.solutions) {
        const char* color = kPalette[idx++ % 8];
        if (const auto* c = std::get_if<SolCircle>(&s))
            emit_circle(out, c->cx, c->cy, c->r, color, sw_sol);
        else if (const auto* l = std::get_if<SolLine>(&s))
            emit_line(out, l->nx, l->ny, l->d, view, color, sw_sol);
        else if (const auto* p = std::get_if<SolPoint>(&s))
            emit_dot(out, p->x, p->y, dot * 0.7, color);
        // The ideal point has no finite position; the legend below names it.
    }

    for (const auto& o : a.input) {
        if (const auto* c = std::get_if<CircleObj<Rat>>(&o))
            emit_circle(out, to_double(c->center.x), to_double(c->center.y),
                        to_double(c->radius), "#1a1a1a", sw_in);
        else if (const auto* p = std::get_if<PointObj<Rat>>(&o))
            emit_dot(out, to_double(p->p.x), to_double(p->p.y), dot, "#1a1a1a");
        else {
            const auto& l = std::get<LineObj<Rat>>(o);
            double nx = to_double(l.nx), ny = to_double(l.ny), d = to_double(l.d);
            double n = std::hypot(nx, ny);
            emit_line(out, nx / n, ny / n, d / n, view, "#1a1a1a", sw_in);
        }
    }

    std::string note = a.infinite ? "infinite family" : std::to_string(a.count) + " solutions";
    for (const auto& s : a.solutions)
        if (std::holds_alternative<SolIdealPoint>(s)) note += " (incl. ideal point)";
    out << "  <text x=\"" << cnum(view.minx + 0.02 * w) << "\" y=\""
        << cnum(-view.maxy + 0.05 * h) << "\" font-family=\"sans-serif\" font-size=\""
        << cnum(0.035 * h) << "\" fill=\"#1a1a1a\">" << note << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace apollo
