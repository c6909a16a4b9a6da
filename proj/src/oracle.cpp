#include "apollo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace apollo {

namespace {

constexpr double kResidualTol = 1e-9;   // acceptance gate, unit-scale inputs
constexpr double kDedupTol = 1e-5;      // merge radius factor for duplicate candidates
constexpr double kPointRadius = 1e-7;   // below this a circle is a recovered double point

double hypot2(double x, double y) { return x * x + y * y; }

// Candidate solutions stay in plain structs until the API boundary; the
// numeric kernels never read back through the variant.
struct Candidate {
    double x, y, rho;
};

double res_circle(double cx, double cy, double rho, const OracleObject& obj) {
    double d = std::sqrt(hypot2(cx - obj.x, cy - obj.y));
    if (obj.r == 0) return std::fabs(d - rho);
    return std::min(std::fabs(d - std::fabs(rho - obj.r)), std::fabs(d - (rho + obj.r)));
}

double res_line(double nx, double ny, double dd, const OracleObject& obj) {
    double h = std::fabs(nx * obj.x + ny * obj.y - dd);
    return std::fabs(h - obj.r);
}

double max_residual(const Candidate& c, const OracleTriple& objs) {
    double worst = 0;
    for (const auto& o : objs) worst = std::max(worst, res_circle(c.x, c.y, c.rho, o));
    return worst;
}

// One Newton step on F_i = (x-x_i)^2 + (y-y_i)^2 - (rho + s_i r_i)^2.
bool newton_step(Candidate& c, const OracleTriple& objs, const std::array<int, 3>& signs) {
    double f[3], j[3][3];
    for (int i = 0; i < 3; ++i) {
        double dx = c.x - objs[i].x;
        double dy = c.y - objs[i].y;
        double dr = c.rho + signs[i] * objs[i].r;
        f[i] = dx * dx + dy * dy - dr * dr;
        j[i][0] = 2 * dx;
        j[i][1] = 2 * dy;
        j[i][2] = -2 * dr;
    }
    double det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1])
               - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0])
               + j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
    double scale = 0;
    for (auto& row : j)
        for (double v : row) scale = std::max(scale, std::fabs(v));
    if (std::fabs(det) <= 1e-12 * scale * scale * scale) return false;
    auto solve3 = [&](int col) {
        double m[3][3];
        for (int r = 0; r < 3; ++r)
            for (int k = 0; k < 3; ++k) m[r][k] = (k == col) ? -f[r] : j[r][k];
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
              - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
              + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])) / det;
    };
    double sx = solve3(0), sy = solve3(1), sr = solve3(2);
    c.x += sx;
    c.y += sy;
    c.rho += sr;
    return true;
}

double input_scale(const OracleTriple& objs) {
    double s = 1;
    for (const auto& o : objs)
        s = std::max({s, std::fabs(o.x), std::fabs(o.y), o.r});
    return s;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// Double recoveries of one solution (straddling roots at a near-double
// root, or a seeded input circle re-found by its own quadratic) agree in
// size and differ by noise proportional to that size, so the merge radius
// grows with rho. It must follow the smaller candidate of the pair: a
// near-degenerate sign system yields one escaping root and one moderate
// root, and a radius keyed to the larger would swallow the moderate one.
bool same_candidate(const Candidate& a, const Candidate& b, double scale) {
    double rho = std::min(std::fabs(a.rho), std::fabs(b.rho));
    double tol = kDedupTol * std::max(scale, rho);
    return near(a.x, b.x, tol) && near(a.y, b.y, tol) && near(a.rho, b.rho, tol);
}

// Unoriented line key comparison: (n,d) and (-n,-d) are the same line.
bool same_line(const SolLine& a, const SolLine& b, double tol) {
    if (near(a.nx, b.nx, tol) && near(a.ny, b.ny, tol) && near(a.d, b.d, tol)) return true;
    return near(a.nx, -b.nx, tol) && near(a.ny, -b.ny, tol) && near(a.d, -b.d, tol);
}

SolLine unoriented(double nx, double ny, double d) {
    auto c = canonical_line(nx, ny, d);
    return SolLine{c.nx, c.ny, c.d};
}

std::vector<Candidate> solve_core(const OracleTriple& objs, const std::array<int, 3>& signs) {
    const double scale = input_scale(objs);
    const double q0 = hypot2(objs[0].x, objs[0].y) - objs[0].r * objs[0].r;

    // Differencing tangency equation i against equation 0 cancels the
    // quadratic terms: a_i x + b_i y + c_i rho = e_i.
    double a[2], b[2], cc[2], e[2];
    for (int i = 1; i <= 2; ++i) {
        a[i - 1] = 2 * (objs[i].x - objs[0].x);
        b[i - 1] = 2 * (objs[i].y - objs[0].y);
        cc[i - 1] = 2 * (signs[i] * objs[i].r - signs[0] * objs[0].r);
        e[i - 1] = hypot2(objs[i].x, objs[i].y) - objs[i].r * objs[i].r - q0;
    }

    // Kernel direction of the 2x3 system.
    double vx = b[0] * cc[1] - cc[0] * b[1];
    double vy = cc[0] * a[1] - a[0] * cc[1];
    double vr = a[0] * b[1] - b[0] * a[1];
    double rowscale = 0;
    for (int i = 0; i < 2; ++i)
        rowscale = std::max({rowscale, std::fabs(a[i]), std::fabs(b[i]), std::fabs(cc[i])});
    double vmax = std::max({std::fabs(vx), std::fabs(vy), std::fabs(vr)});
    if (vmax <= 1e-12 * rowscale * rowscale)
        return {};  // rank < 2: any solutions here are lines, found elsewhere

    // Particular point: zero the variable carrying the largest kernel
    // component and solve the remaining 2x2 (its determinant is +-that
    // component, so it is the best-conditioned subsystem).
    double px = 0, py = 0, pr = 0;
    if (std::fabs(vr) == vmax) {
        px = (e[0] * b[1] - e[1] * b[0]) / vr;
        py = (a[0] * e[1] - a[1] * e[0]) / vr;
    } else if (std::fabs(vy) == vmax) {
        px = (e[1] * cc[0] - e[0] * cc[1]) / vy;
        pr = (a[1] * e[0] - a[0] * e[1]) / vy;
    } else {
        py = (e[0] * cc[1] - e[1] * cc[0]) / vx;
        pr = (b[0] * e[1] - b[1] * e[0]) / vx;
    }

    // Substitute (p + t v) into equation 0: alpha t^2 + beta t + gamma = 0.
    double dx = px - objs[0].x;
    double dy = py - objs[0].y;
    double dr = pr + signs[0] * objs[0].r;
    double alpha = vx * vx + vy * vy - vr * vr;
    double beta = 2 * (dx * vx + dy * vy - dr * vr);
    double gamma = dx * dx + dy * dy - dr * dr;

    double roots[2];
    int nroots = 0;
    double ascale = vx * vx + vy * vy + vr * vr;
    if (std::fabs(alpha) <= 1e-14 * ascale) {
        if (std::fabs(beta) > 1e-14 * ascale * scale) roots[nroots++] = -gamma / beta;
    } else {
        double disc = beta * beta - 4 * alpha * gamma;
        if (disc <= 0) {
            // Tangential or empty intersection. A double root shows up with
            // a slightly negative discriminant once rounding perturbs an
            // exact tangency, and no fixed threshold separates the two cases
            // because every term of disc cancels with it; take the vertex
            // unconditionally and let the residual gate decide.
            roots[nroots++] = -beta / (2 * alpha);
        } else {
            double sq = std::sqrt(disc);
            // Citardauq for the smaller-magnitude root to avoid cancellation.
            double qq = -0.5 * (beta + (beta >= 0 ? sq : -sq));
            roots[nroots++] = qq / alpha;
            roots[nroots++] = qq != 0 ? gamma / qq : (-beta + sq) / (2 * alpha);
        }
    }

    std::vector<Candidate> out;

    // An input circle is itself a root of the system with its own sign -1
    // whenever it is tangent to the other two objects. That root makes its
    // own Jacobian row vanish, so the quadratic recovers it with only half
    // the working precision; seed it from the exact input data instead.
    for (int i = 0; i < 3; ++i) {
        if (objs[i].r <= 0 || signs[i] != -1) continue;
        bool tangent_to_rest = true;
        for (int k = 0; k < 3 && tangent_to_rest; ++k) {
            if (k == i) continue;
            double dd = hypot2(objs[i].x - objs[k].x, objs[i].y - objs[k].y);
            double rr = objs[i].r + signs[k] * objs[k].r;
            tangent_to_rest = std::fabs(dd - rr * rr) <= 1e-12 * scale * scale;
        }
        if (tangent_to_rest) out.push_back({objs[i].x, objs[i].y, objs[i].r});
    }

    for (int i = 0; i < nroots; ++i) {
        double t = roots[i];
        Candidate cand{px + t * vx, py + t * vy, pr + t * vr};
        if (cand.rho < -1e-9 * scale) continue;
        for (int it = 0; it < 2; ++it)
            if (!newton_step(cand, objs, signs)) break;
        if (cand.rho < 0) {
            if (cand.rho < -1e-9 * scale) continue;
            cand.rho = 0;
        }
        // Negated form so a NaN residual (Newton blowup from a hopeless
        // start) is rejected too.
        if (!(max_residual(cand, objs) <= kResidualTol * scale)) continue;
        bool dup = false;
        for (const auto& g : out)
            dup = dup || same_candidate(g, cand, scale);
        if (!dup) out.push_back(cand);
    }
    return out;
}

std::vector<SolLine> tangent_core(const OracleTriple& objs) {
    const double scale = input_scale(objs);
    const double ux1 = objs[1].x - objs[0].x, uy1 = objs[1].y - objs[0].y;
    const double ux2 = objs[2].x - objs[0].x, uy2 = objs[2].y - objs[0].y;
    const double det = ux1 * uy2 - uy1 * ux2;

    std::vector<SolLine> found;
    auto try_line = [&](double nx, double ny, int sign0) {
        double norm = std::sqrt(hypot2(nx, ny));
        if (std::fabs(norm - 1) > 1e-6) return;
        nx /= norm;
        ny /= norm;
        double d = nx * objs[0].x + ny * objs[0].y - sign0 * objs[0].r;
        double worst = 0;
        for (const auto& o : objs) worst = std::max(worst, res_line(nx, ny, d, o));
        if (worst > kResidualTol * scale) return;
        SolLine l = unoriented(nx, ny, d);
        for (const auto& g : found)
            if (same_line(g, l, kDedupTol)) return;
        found.push_back(l);
    };

    for (int mask = 0; mask < 8; ++mask) {
        std::array<int, 3> signs{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
        double r1 = signs[1] * objs[1].r - signs[0] * objs[0].r;
        double r2 = signs[2] * objs[2].r - signs[0] * objs[0].r;
        if (std::fabs(det) > 1e-9 * scale * scale) {
            try_line((r1 * uy2 - r2 * uy1) / det, (ux1 * r2 - ux2 * r1) / det, signs[0]);
            continue;
        }
        // Collinear centers: one row constrains n; intersect with the unit
        // circle and check the second row.
        double lx = ux1, ly = uy1, rhs = r1, ox = ux2, oy = uy2, orhs = r2;
        if (hypot2(lx, ly) < hypot2(ox, oy)) {
            std::swap(lx, ox);
            std::swap(ly, oy);
            std::swap(rhs, orhs);
        }
        double uu = hypot2(lx, ly);
        if (uu <= 1e-18 * scale * scale) continue;  // coincident centers
        double base = rhs / uu;                     // n = base*u + t*perp(u)
        double t2 = (1 - base * base * uu) / uu;
        if (t2 < -1e-12) continue;
        t2 = std::max(t2, 0.0);
        double t = std::sqrt(t2);
        for (double tt : {t, -t}) {
            double nx = base * lx - tt * ly;
            double ny = base * ly + tt * lx;
            if (std::fabs(nx * ox + ny * oy - orhs) > 1e-7 * scale) continue;
            try_line(nx, ny, signs[0]);
            if (t == 0) break;
        }
    }
    return found;
}

} // namespace

double residual(const SolutionObject& s, const OracleObject& obj) {
    if (const auto* c = std::get_if<SolCircle>(&s)) return res_circle(c->cx, c->cy, c->r, obj);
    if (const auto* l = std::get_if<SolLine>(&s)) return res_line(l->nx, l->ny, l->d, obj);
    if (const auto* p = std::get_if<SolPoint>(&s)) return res_circle(p->x, p->y, 0, obj);
    return std::numeric_limits<double>::infinity();  // ideal point: no metric test
}

std::vector<SolutionObject> solve_sign_system(const OracleTriple& objs,
                                              const std::array<int, 3>& signs) {
    std::vector<SolutionObject> out;
    for (const auto& c : solve_core(objs, signs)) {
        if (c.rho > 0)
            out.push_back(SolCircle{c.x, c.y, c.rho});
        else
            out.push_back(SolPoint{c.x, c.y});
    }
    return out;
}

std::vector<SolutionObject> common_tangent_lines(const OracleTriple& objs) {
    std::vector<SolutionObject> out;
    for (const auto& l : tangent_core(objs)) out.push_back(l);
    return out;
}

OracleResult enumerate_solutions(const OracleTriple& objs,
                                 const std::vector<std::array<double, 2>>& inject_points,
                                 bool exact_infinite) {
    OracleResult res;
    if (exact_infinite) {
        res.infinite = true;
        return res;
    }

    // Normalize to unit scale so the residual and dedup gates are absolute.
    double cx = (objs[0].x + objs[1].x + objs[2].x) / 3;
    double cy = (objs[0].y + objs[1].y + objs[2].y) / 3;
    double extent = 0;
    for (const auto& o : objs)
        extent = std::max({extent, std::fabs(o.x - cx), std::fabs(o.y - cy), o.r});
    double s = extent > 0 ? 1 / extent : 1;
    OracleTriple n;
    for (std::size_t i = 0; i < 3; ++i)
        n[i] = {(objs[i].x - cx) * s, (objs[i].y - cy) * s, objs[i].r * s};

    std::vector<Candidate> circles;
    for (int mask = 0; mask < 8; ++mask) {
        std::array<int, 3> signs{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
        for (const auto& c : solve_core(n, signs)) {
            if (c.rho < kPointRadius) continue;  // points come from injection
            bool dup = false;
            for (const auto& g : circles)
                dup = dup || same_candidate(g, c, 1);
            if (!dup) circles.push_back(c);
        }
    }

    auto lines = tangent_core(n);

    for (const auto& c : circles)
        res.solutions.push_back(SolCircle{c.x / s + cx, c.y / s + cy, c.rho / s});
    for (const auto& l : lines) {
        auto g = unoriented(l.nx, l.ny, l.d / s + l.nx * cx + l.ny * cy);
        res.solutions.push_back(g);
    }
    for (const auto& p : inject_points) res.solutions.push_back(SolPoint{p[0], p[1]});

    res.count = static_cast<int>(res.solutions.size());
    std::sort(res.solutions.begin(), res.solutions.end(), solution_less);
    return res;
}

std::vector<SolLine> oriented_tangent_lines(const std::array<double, 3>& c1,
                                            const std::array<double, 3>& c2) {
    double ux = c1[0] - c2[0], uy = c1[1] - c2[1];
    double d2 = hypot2(ux, uy);
    std::vector<SolLine> out;
    if (d2 == 0) return out;
    double d = std::sqrt(d2);
    double along = (c1[2] - c2[2]) / d;  // n . u/|u| for any common tangent
    double perp2 = 1 - along * along;
    if (perp2 < -1e-12) return out;
    // Inside the band the two tangent directions have merged; report one.
    double perp = perp2 > 1e-12 ? std::sqrt(perp2) : 0;
    for (double t : {perp, -perp}) {
        double nx = (along * ux - t * uy) / d;
        double ny = (along * uy + t * ux) / d;
        out.push_back(SolLine{nx, ny, nx * c1[0] + ny * c1[1] - c1[2]});
        if (perp == 0) break;
    }
    return out;
}

} // namespace apollo
