#include "twosided/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace twosided {

namespace {

constexpr double canvas = 1000.0;
constexpr double center = 500.0;
constexpr double radius = 350.0;
constexpr double clearance = 0.15;

struct point {
    double x;
    double y;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

point on_circle(double angle, double r) {
    return {center + r * std::cos(angle), center + r * std::sin(angle)};
}

double angle_of(int position, int n) {
    return -std::numbers::pi / 2 + 2 * std::numbers::pi * position / n;
}

double cross(point a, point b) { return a.x * b.y - a.y * b.x; }

point sub(point a, point b) { return {a.x - b.x, a.y - b.y}; }

point circumcenter(point a, point b, point c) {
    const double d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    const double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y, c2 = c.x * c.x + c.y * c.y;
    return {(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
            (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
}

std::string arc_path(const layout_instance &instance, const edge &e) {
    const int n = instance.vertex_count();
    const int pi = instance.position(e.u), pj = instance.position(e.v);
    int forward = ((pj - pi) % n + n) % n;
    const int span = std::min(forward, n - forward);
    // Walk the shorter way; on a tie go in increasing position order from pi.
    const double mid_steps = forward <= n - forward ? forward / 2.0 : -(n - forward) / 2.0;
    const double apex_angle = angle_of(pi, n) + 2 * std::numbers::pi * mid_steps / n;
    const double frac = span / (n / 2.0);
    const point a = on_circle(angle_of(pi, n), radius);
    const point b = on_circle(angle_of(pj, n), radius);
    const point apex = on_circle(apex_angle, radius * (1 + clearance * frac));

    const point c = circumcenter(a, apex, b);
    const double r = std::hypot(a.x - c.x, a.y - c.y);
    const bool sweep = cross(sub(apex, a), sub(b, apex)) > 0;
    const point chord = sub(b, a);
    const bool large = (cross(chord, sub(apex, a)) > 0) == (cross(chord, sub(c, a)) > 0);

    std::ostringstream out;
    out << "M " << num(a.x) << ' ' << num(a.y) << " A " << num(r) << ' ' << num(r) << " 0 " << (large ? 1 : 0) << ' '
        << (sweep ? 1 : 0) << ' ' << num(b.x) << ' ' << num(b.y);
    return out.str();
}

}  // namespace

std::string render_layout(const layout_instance &instance, const two_sided_assignment &assignment,
                          const render_options &options) {
    if (assignment.edge_count() != instance.edge_count())
        throw std::invalid_argument("assignment does not match the instance's edges");
    const int n = instance.vertex_count();
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas << "\" height=\"" << canvas
        << "\" viewBox=\"0 0 " << canvas << ' ' << canvas << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (options.show_outline)
        out << "<circle cx=\"" << num(center) << "\" cy=\"" << num(center) << "\" r=\"" << num(radius)
            << "\" fill=\"none\" stroke=\"#d0d0d0\" stroke-width=\"1\"/>\n";

    out << "<g id=\"interior\" stroke=\"#3b6ea8\" stroke-width=\"1.5\" fill=\"none\">\n";
    for (edge_id id : assignment.interior()) {
        const edge &e = instance.at(id);
        const point a = on_circle(angle_of(instance.position(e.u), n), radius);
        const point b = on_circle(angle_of(instance.position(e.v), n), radius);
        out << "<line data-edge=\"" << id << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
            << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g id=\"exterior\" stroke=\"#c0504d\" stroke-width=\"1.5\" fill=\"none\">\n";
    for (edge_id id : assignment.exterior())
        out << "<path data-edge=\"" << id << "\" d=\"" << arc_path(instance, instance.at(id)) << "\"/>\n";
    out << "</g>\n";

    out << "<g id=\"vertices\" fill=\"#222222\">\n";
    for (int p = 0; p < n; ++p) {
        const point c = on_circle(angle_of(p, n), radius);
        const vertex_id v = instance.order()[static_cast<std::size_t>(p)];
        out << "<circle data-vertex=\"" << v << "\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"6\"/>\n";
        if (options.labels) {
            const point t = on_circle(angle_of(p, n), radius - 22);
            out << "<text x=\"" << num(t.x) << "\" y=\"" << num(t.y)
                << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
                << v + 1 << "</text>\n";
        }
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

layout_summary layout_stats(const layout_instance &instance, const two_sided_assignment &assignment) {
    const crossing_counts counts = count_crossings(instance, assignment);
    layout_summary s{counts.interior, counts.exterior, 0, 0};
    const auto exterior = assignment.exterior();
    s.exterior_edges = static_cast<int>(exterior.size());
    for (edge_id a : exterior) {
        int d = 0;
        for (edge_id b : exterior)
            if (a != b && chords_cross(instance.at(a), instance.at(b), instance.positions())) ++d;
        s.max_exterior_crossings = std::max(s.max_exterior_crossings, d);
    }
    return s;
}

}  // namespace twosided
