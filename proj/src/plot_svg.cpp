#include "qlps/plot_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qlps {

namespace {

constexpr double kW = 720, kH = 480;
constexpr double kL = 70, kR = 20, kT = 40, kB = 50;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!(hi > lo)) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
    double at(double v) const { return (v - lo) / (hi - lo); }
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<PlotSeries>& series,
                           bool log_x, bool log_y) {
    auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
    auto ty = [&](double v) { return log_y ? std::log10(v) : v; };
    Range rx, ry;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (log_x && !(s.x[i] > 0)) continue;
            if (log_y && !(s.y[i] > 0)) continue;
            if (!std::isfinite(tx(s.x[i])) || !std::isfinite(ty(s.y[i]))) continue;
            rx.add(tx(s.x[i]));
            ry.add(ty(s.y[i]));
        }
    rx.pad();
    ry.pad();

    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    os << "<text x='" << kW / 2 << "' y='20' text-anchor='middle' font-size='15'>" << title
       << "</text>\n";
    os << "<text x='" << kW / 2 << "' y='" << kH - 8 << "' text-anchor='middle' font-size='12'>"
       << x_label << "</text>\n";
    os << "<text x='14' y='" << kH / 2
       << "' text-anchor='middle' font-size='12' transform='rotate(-90 14 " << kH / 2 << ")'>"
       << y_label << "</text>\n";
    os << "<rect x='" << kL << "' y='" << kT << "' width='" << kW - kL - kR << "' height='"
       << kH - kT - kB << "' fill='none' stroke='#333'/>\n";

    for (int t = 0; t <= 4; ++t) {
        const double fx = kL + t / 4.0 * (kW - kL - kR);
        const double fy = kH - kB - t / 4.0 * (kH - kT - kB);
        double xv = rx.lo + t / 4.0 * (rx.hi - rx.lo);
        double yv = ry.lo + t / 4.0 * (ry.hi - ry.lo);
        if (log_x) xv = std::pow(10.0, xv);
        if (log_y) yv = std::pow(10.0, yv);
        os << "<text x='" << fx << "' y='" << kH - kB + 16
           << "' text-anchor='middle' font-size='10'>" << fmt(xv) << "</text>\n";
        os << "<text x='" << kL - 6 << "' y='" << fy + 3
           << "' text-anchor='end' font-size='10'>" << fmt(yv) << "</text>\n";
    }

    int ci = 0;
    for (const auto& s : series) {
        const std::string color = s.color.empty() ? kPalette[ci % 8] : s.color;
        os << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (log_x && !(s.x[i] > 0)) continue;
            if (log_y && !(s.y[i] > 0)) continue;
            const double px = kL + rx.at(tx(s.x[i])) * (kW - kL - kR);
            const double py = kH - kB - ry.at(ty(s.y[i])) * (kH - kT - kB);
            if (std::isfinite(px) && std::isfinite(py)) os << fmt(px) << "," << fmt(py) << " ";
        }
        os << "'/>\n";
        os << "<text x='" << kW - kR - 8 << "' y='" << kT + 16 + 14 * ci
           << "' text-anchor='end' font-size='11' fill='" << color << "'>" << s.label
           << "</text>\n";
        ++ci;
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_heatmap(const std::string& title, const std::string& x_label,
                        const std::string& y_label, const std::vector<double>& xs,
                        const std::vector<double>& ys,
                        const std::vector<std::vector<double>>& values) {
    Range rv;
    for (const auto& row : values)
        for (double v : row)
            if (std::isfinite(v)) rv.add(v);
    rv.pad();
    // Symmetric diverging scale around zero: blue negative, red positive.
    const double ext = std::max(std::abs(rv.lo), std::abs(rv.hi));

    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    os << "<text x='" << kW / 2 << "' y='20' text-anchor='middle' font-size='15'>" << title
       << "</text>\n";
    os << "<text x='" << kW / 2 << "' y='" << kH - 8 << "' text-anchor='middle' font-size='12'>"
       << x_label << "</text>\n";
    os << "<text x='14' y='" << kH / 2
       << "' text-anchor='middle' font-size='12' transform='rotate(-90 14 " << kH / 2 << ")'>"
       << y_label << "</text>\n";

    const double cw = (kW - kL - kR) / xs.size();
    const double ch = (kH - kT - kB) / ys.size();
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        for (std::size_t xi = 0; xi < xs.size(); ++xi) {
            const double v = values[yi][xi];
            int rch = 255, g = 255, b = 255;
            if (std::isfinite(v) && ext > 0) {
                const double t = std::clamp(v / ext, -1.0, 1.0);
                if (t >= 0) {
                    g = b = static_cast<int>(255 * (1 - t));
                } else {
                    rch = g = static_cast<int>(255 * (1 + t));
                }
            }
            char color[16];
            std::snprintf(color, sizeof(color), "#%02x%02x%02x", rch, g, b);
            os << "<rect x='" << fmt(kL + xi * cw) << "' y='"
               << fmt(kH - kB - (yi + 1) * ch) << "' width='" << fmt(cw + 0.5) << "' height='"
               << fmt(ch + 0.5) << "' fill='" << color << "'/>\n";
        }
    }
    os << "<rect x='" << kL << "' y='" << kT << "' width='" << kW - kL - kR << "' height='"
       << kH - kT - kB << "' fill='none' stroke='#333'/>\n";
    for (std::size_t xi = 0; xi < xs.size(); xi += std::max<std::size_t>(1, xs.size() / 6))
        os << "<text x='" << fmt(kL + (xi + 0.5) * cw) << "' y='" << kH - kB + 16
           << "' text-anchor='middle' font-size='10'>" << fmt(xs[xi]) << "</text>\n";
    for (std::size_t yi = 0; yi < ys.size(); yi += std::max<std::size_t>(1, ys.size() / 6))
        os << "<text x='" << kL - 6 << "' y='" << fmt(kH - kB - (yi + 0.5) * ch + 3)
           << "' text-anchor='end' font-size='10'>" << fmt(ys[yi]) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace qlps
