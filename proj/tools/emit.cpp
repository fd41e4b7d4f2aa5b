#include "emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace weyl::cli {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string num17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Viewport {
    double x0, y0, width, height;  // data coordinates, y up
    static constexpr double kCanvas = 640.0;

    double scale() const { return kCanvas / width; }
    double map_x(double x) const { return (x - x0) * scale(); }
    double map_y(double y) const { return (y0 + height - y) * scale(); }  // invert y
    double canvas_height() const { return height * scale(); }
};

Viewport fit_viewport(const WeylRegion& region, const std::vector<Complex>& extra) {
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool first = true;
    auto include = [&](double x, double y) {
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
            return;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const auto& c : region.circles) {
        include(c.center.real() - c.radius, c.center.imag() - c.radius);
        include(c.center.real() + c.radius, c.center.imag() + c.radius);
    }
    for (Complex v : region.vertices) include(v.real(), v.imag());
    for (Complex p : extra) include(p.real(), p.imag());
    if (first) include(0.0, 0.0);

    double w = xmax - xmin, h = ymax - ymin;
    if (w <= 0.0) w = 1.0;
    if (h <= 0.0) h = 1.0;
    return Viewport{xmin - 0.1 * w, ymin - 0.1 * h, 1.2 * w, 1.2 * h};
}

}  // namespace

void emit_boundary_csv(std::ostream& out, const WeylRegion& region, int samples) {
    out << "arc,t,re,im\n";
    for (const auto& sample : boundary_samples(region, samples))
        out << sample.arc << ',' << num17(sample.t) << ',' << num17(sample.value.real()) << ','
            << num17(sample.value.imag()) << '\n';
}

void emit_region_svg(std::ostream& out, const WeylRegion& region, int samples,
                     const std::vector<Complex>& transform_points) {
    const Viewport vp = fit_viewport(region, transform_points);
    const char* arc_colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(Viewport::kCanvas)
        << "\" height=\"" << num(vp.canvas_height()) << "\" viewBox=\"0 0 "
        << num(Viewport::kCanvas) << ' ' << num(vp.canvas_height()) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Real axis when visible.
    if (vp.y0 < 0.0 && vp.y0 + vp.height > 0.0)
        out << "  <line x1=\"0\" y1=\"" << num(vp.map_y(0.0)) << "\" x2=\""
            << num(Viewport::kCanvas) << "\" y2=\"" << num(vp.map_y(0.0))
            << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    for (const auto& c : region.circles)
        out << "  <circle cx=\"" << num(vp.map_x(c.center.real())) << "\" cy=\""
            << num(vp.map_y(c.center.imag())) << "\" r=\"" << num(c.radius * vp.scale())
            << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" "
               "stroke-dasharray=\"4,3\"/>\n";

    const auto arcs = boundary_samples(region, samples);
    for (std::size_t arc = 0; arc < region.arcs.size(); ++arc) {
        out << "  <polyline fill=\"none\" stroke=\"" << arc_colors[arc % 8]
            << "\" stroke-width=\"2\" points=\"";
        bool space = false;
        for (const auto& sample : arcs) {
            if (sample.arc != arc) continue;
            if (space) out << ' ';
            out << num(vp.map_x(sample.value.real())) << ',' << num(vp.map_y(sample.value.imag()));
            space = true;
        }
        out << "\"/>\n";
    }

    for (Complex v : region.vertices)
        out << "  <circle cx=\"" << num(vp.map_x(v.real())) << "\" cy=\""
            << num(vp.map_y(v.imag())) << "\" r=\"4\" fill=\"#d62728\"/>\n";

    for (Complex p : transform_points) {
        const double x = vp.map_x(p.real()), y = vp.map_y(p.imag());
        out << "  <path d=\"M " << num(x - 4) << ' ' << num(y) << " H " << num(x + 4) << " M "
            << num(x) << ' ' << num(y - 4) << " V " << num(y + 4)
            << "\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace weyl::cli
