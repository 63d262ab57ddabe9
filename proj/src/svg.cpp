#include "heisgeo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace heisgeo {

namespace {

const char* kPathColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string svg_plan_view(const std::vector<Box3>& boxes,
                          const std::vector<KoranyiBall>& balls,
                          const std::vector<Polyline3>& paths) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    auto grow = [&](double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    for (const Box3& b : boxes) {
        grow(b.x0, b.y0);
        grow(b.x1, b.y1);
    }
    for (const KoranyiBall& b : balls) {
        grow(b.center.x - b.radius, b.center.y - b.radius);
        grow(b.center.x + b.radius, b.center.y + b.radius);
    }
    for (const Polyline3& p : paths)
        for (const HPoint& v : p.vertices) grow(v.x, v.y);
    if (x0 > x1) {
        x0 = y0 = -1.0;
        x1 = y1 = 1.0;
    }
    const double pad = 0.05 * std::max(x1 - x0, y1 - y0) + 1e-9;
    x0 -= pad;
    y0 -= pad;
    x1 += pad;
    y1 += pad;
    const double w = x1 - x0, h = y1 - y0;
    const double stroke = 0.004 * std::max(w, h);

    std::ostringstream s;
    // y flipped so the plan view reads with y upward
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << " " << fmt(-y1)
      << " " << fmt(w) << " " << fmt(h) << "\">\n";
    for (const Box3& b : boxes)
        s << "  <rect x=\"" << fmt(b.x0) << "\" y=\"" << fmt(-b.y1) << "\" width=\""
          << fmt(b.x1 - b.x0) << "\" height=\"" << fmt(b.y1 - b.y0)
          << "\" fill=\"#99b3cc\" fill-opacity=\"0.55\" stroke=\"#335\" stroke-width=\""
          << fmt(0.3 * stroke) << "\"/>\n";
    for (const KoranyiBall& b : balls)
        s << "  <circle cx=\"" << fmt(b.center.x) << "\" cy=\"" << fmt(-b.center.y)
          << "\" r=\"" << fmt(b.radius)
          << "\" fill=\"#cc9999\" fill-opacity=\"0.55\" stroke=\"#533\" stroke-width=\""
          << fmt(0.3 * stroke) << "\"/>\n";
    for (size_t i = 0; i < paths.size(); ++i) {
        s << "  <polyline fill=\"none\" stroke=\"" << kPathColors[i % 5]
          << "\" stroke-width=\"" << fmt(stroke) << "\" points=\"";
        for (const HPoint& v : paths[i].vertices) s << fmt(v.x) << "," << fmt(-v.y) << " ";
        s << "\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string polyline_csv(const Polyline3& poly) {
    std::ostringstream s;
    s << "x,y,t\n";
    for (const HPoint& v : poly.vertices) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", v.x, v.y, v.t);
        s << buf;
    }
    return s.str();
}

} // namespace heisgeo
