#pragma once

#include <string>
#include <vector>

namespace qlps {

struct PlotSeries {
    std::string label;
    std::string color;
    std::vector<double> x, y;
};

// Minimal dependency-free SVG emitters. CSV remains the canonical output;
// these are a convenience for eyeballing sweeps.
std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<PlotSeries>& series,
                           bool log_x = false, bool log_y = false);

std::string svg_heatmap(const std::string& title, const std::string& x_label,
                        const std::string& y_label, const std::vector<double>& xs,
                        const std::vector<double>& ys,
                        const std::vector<std::vector<double>>& values);

}  // namespace qlps
