#include "smlab/experiments/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace smlab {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// round tick spacing to 1/2/5 * 10^k
double nice_step(double span, int target_ticks) {
    double raw = span / target_ticks;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double r = raw / mag;
    double step = r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0;
    return step * mag;
}

}  // namespace

std::string render_line_plot(const PlotSeries& series, const std::string& title,
                             const std::string& x_label, const std::string& y_label) {
    if (series.x.empty() || series.x.size() != series.y.size())
        throw std::runtime_error("render_line_plot: empty or mismatched series");
    const bool banded = series.band.size() == series.x.size();

    double x_lo = *std::min_element(series.x.begin(), series.x.end());
    double x_hi = *std::max_element(series.x.begin(), series.x.end());
    double y_lo = series.y[0], y_hi = series.y[0];
    for (std::size_t i = 0; i < series.y.size(); ++i) {
        double b = banded ? series.band[i] : 0.0;
        y_lo = std::min(y_lo, series.y[i] - b);
        y_hi = std::max(y_hi, series.y[i] + b);
    }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    if (y_hi == y_lo) y_hi = y_lo + 1.0;
    double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    const double width = 900, height = 560;
    const double ml = 80, mr = 25, mt = 45, mb = 60;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return mt + (1.0 - (y - y_lo) / (y_hi - y_lo)) * ph; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) +
         "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + fmt(width / 2) + "\" y=\"25\" text-anchor=\"middle\" font-size=\"16\" "
         "font-family=\"sans-serif\">" + title + "</text>\n";

    // axes frame
    s += "<rect x=\"" + fmt(ml) + "\" y=\"" + fmt(mt) + "\" width=\"" + fmt(pw) + "\" height=\"" +
         fmt(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

    double xs = nice_step(x_hi - x_lo, 8);
    for (double t = std::ceil(x_lo / xs) * xs; t <= x_hi + 1e-12 * xs; t += xs) {
        s += "<line x1=\"" + fmt(px(t)) + "\" y1=\"" + fmt(mt + ph) + "\" x2=\"" + fmt(px(t)) +
             "\" y2=\"" + fmt(mt + ph + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fmt(px(t)) + "\" y=\"" + fmt(mt + ph + 20) +
             "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" + fmt(t) +
             "</text>\n";
    }
    double ys = nice_step(y_hi - y_lo, 6);
    for (double t = std::ceil(y_lo / ys) * ys; t <= y_hi + 1e-12 * ys; t += ys) {
        s += "<line x1=\"" + fmt(ml - 5) + "\" y1=\"" + fmt(py(t)) + "\" x2=\"" + fmt(ml) +
             "\" y2=\"" + fmt(py(t)) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fmt(ml - 8) + "\" y=\"" + fmt(py(t) + 4) +
             "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">" + fmt(t) +
             "</text>\n";
    }
    s += "<text x=\"" + fmt(ml + pw / 2) + "\" y=\"" + fmt(height - 15) +
         "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\">" + x_label +
         "</text>\n";
    s += "<text x=\"20\" y=\"" + fmt(mt + ph / 2) +
         "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\" transform=\"rotate(-90 20 " +
         fmt(mt + ph / 2) + ")\">" + y_label + "</text>\n";

    if (banded) {
        std::string poly;
        for (std::size_t i = 0; i < series.x.size(); ++i)
            poly += fmt(px(series.x[i])) + "," + fmt(py(series.y[i] + series.band[i])) + " ";
        for (std::size_t i = series.x.size(); i-- > 0;)
            poly += fmt(px(series.x[i])) + "," + fmt(py(series.y[i] - series.band[i])) + " ";
        s += "<polygon points=\"" + poly + "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    }

    std::string line;
    for (std::size_t i = 0; i < series.x.size(); ++i)
        line += fmt(px(series.x[i])) + "," + fmt(py(series.y[i])) + " ";
    s += "<polyline points=\"" + line + "\" fill=\"none\" stroke=\"#08519c\" stroke-width=\"1.5\"/>\n";

    s += "</svg>\n";
    return s;
}

void write_svg(const std::string& path, const std::string& svg_text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << svg_text;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace smlab
