#pragma once

#include <string>
#include <vector>

namespace smlab {

struct PlotSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> band;  // half-width around y (e.g. 2 stderr); may be empty
};

// Minimal self-contained SVG 1.1 line plot: axes, ticks, labels, one polyline
// with an optional shaded uncertainty band. No external renderer.
std::string render_line_plot(const PlotSeries& series, const std::string& title,
                             const std::string& x_label, const std::string& y_label);

void write_svg(const std::string& path, const std::string& svg_text);

}  // namespace smlab
