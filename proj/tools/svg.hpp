#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

namespace satgame::cli {

struct PlotPoint {
    double x = 0;
    double y = 0;
};

struct PlotCurve {
    std::string label;
    std::string colour;
    std::vector<PlotPoint> points;
};

// Minimal scatter-plus-reference-curves plot; enough to eyeball a sweep.
inline void write_svg(const std::string& path, const std::string& x_label,
                      const std::string& y_label, const std::vector<PlotPoint>& scatter,
                      const std::vector<PlotCurve>& curves) {
    const double width = 640, height = 480, margin = 56;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto widen = [&](const PlotPoint& p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    for (const auto& p : scatter) widen(p);
    for (const auto& c : curves)
        for (const auto& p : c.points) widen(p);
    if (xmin > xmax) {
        xmin = 0;
        xmax = 1;
        ymin = 0;
        ymax = 1;
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    auto sx = [&](double x) {
        return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
    };
    auto sy = [&](double y) {
        return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
    };

    std::ofstream out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
        << width - margin << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
        << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n";
    out << "<text x=\"16\" y=\"" << height / 2 << "\" font-size=\"13\" transform=\"rotate(-90 16 "
        << height / 2 << ")\" text-anchor=\"middle\">" << y_label << "</text>\n";

    int legend_y = static_cast<int>(margin);
    for (const auto& c : curves) {
        out << "<polyline fill=\"none\" stroke=\"" << c.colour << "\" points=\"";
        for (const auto& p : c.points) out << sx(p.x) << "," << sy(p.y) << " ";
        out << "\"/>\n";
        out << "<text x=\"" << width - margin + 4 << "\" y=\"" << legend_y
            << "\" font-size=\"11\" fill=\"" << c.colour << "\">" << c.label << "</text>\n";
        legend_y += 14;
    }
    for (const auto& p : scatter)
        out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
            << "\" r=\"3\" fill=\"steelblue\"/>\n";
    out << "</svg>\n";
}

}  // namespace satgame::cli
