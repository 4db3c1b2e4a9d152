#ifndef MAGLAB_PLOT_HPP
#define MAGLAB_PLOT_HPP

#include <string>
#include <vector>

namespace maglab {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    std::vector<Series> series;
};

/// Renders a minimal self-contained SVG line chart (axes, ticks, series,
/// labels; no external assets). Non-finite samples are dropped.
std::string render_line_chart(const ChartSpec& spec);

void write_line_chart(const std::string& path, const ChartSpec& spec);

}  // namespace maglab

#endif  // MAGLAB_PLOT_HPP
