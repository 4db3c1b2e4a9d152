#include "maglab/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "maglab/errors.hpp"

namespace maglab {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

const char* kSeriesColors[] = {"#1f6fb2", "#c44e52", "#55a868", "#8172b2"};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range pad(Range r) {
    if (r.lo == r.hi) {
        const double d = r.lo == 0.0 ? 1.0 : std::fabs(r.lo) * 0.1;
        return {r.lo - d, r.hi + d};
    }
    const double d = (r.hi - r.lo) * 0.05;
    return {r.lo - d, r.hi + d};
}

}  // namespace

std::string render_line_chart(const ChartSpec& spec) {
    Range xr{1e300, -1e300}, yr{1e300, -1e300};
    bool any = false;
    for (const Series& s : spec.series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            double x = s.x[i];
            const double y = s.y[i];
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (spec.log_x) {
                if (!(x > 0.0)) continue;
                x = std::log10(x);
            }
            xr.lo = std::min(xr.lo, x);
            xr.hi = std::max(xr.hi, x);
            yr.lo = std::min(yr.lo, y);
            yr.hi = std::max(yr.hi, y);
            any = true;
        }
    }
    if (!any) {
        xr = {0.0, 1.0};
        yr = {0.0, 1.0};
    }
    xr = pad(xr);
    yr = pad(yr);

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) {
        return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
    };
    auto sy = [&](double y) {
        return kMarginTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">"
        << escape_xml(spec.title) << "</text>\n";

    // Axes.
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h
        << "\" x2=\"" << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
        << kMarginLeft << "\" y2=\"" << kMarginTop + plot_h
        << "\" stroke=\"black\"/>\n";

    const int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / ticks;
        const double px = sx(fx);
        const double label = spec.log_x ? std::pow(10.0, fx) : fx;
        svg << "<line x1=\"" << px << "\" y1=\"" << kMarginTop + plot_h
            << "\" x2=\"" << px << "\" y2=\"" << kMarginTop + plot_h + 5
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << px << "\" y=\"" << kMarginTop + plot_h + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            << "font-size=\"11\">" << fmt(label) << "</text>\n";

        const double fy = yr.lo + (yr.hi - yr.lo) * i / ticks;
        const double py = sy(fy);
        svg << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << py << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << py + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
            << "font-size=\"11\">" << fmt(fy) << "</text>\n";
    }

    svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << escape_xml(spec.x_label) << (spec.log_x ? " (log scale)" : "")
        << "</text>\n";
    svg << "<text x=\"16\" y=\"" << kMarginTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        << "transform=\"rotate(-90 16 " << kMarginTop + plot_h / 2 << ")\">"
        << escape_xml(spec.y_label) << "</text>\n";

    std::size_t color = 0;
    for (const Series& s : spec.series) {
        std::ostringstream pts;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            double x = s.x[i];
            const double y = s.y[i];
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (spec.log_x) {
                if (!(x > 0.0)) continue;
                x = std::log10(x);
            }
            if (pts.tellp() > 0) pts << " ";
            pts << fmt(sx(x)) << "," << fmt(sy(y));
        }
        const char* stroke = kSeriesColors[color % 4];
        svg << "<polyline fill=\"none\" stroke=\"" << stroke
            << "\" stroke-width=\"1.5\" points=\"" << pts.str() << "\"/>\n";
        if (!s.label.empty()) {
            const double ly = kMarginTop + 14.0 * static_cast<double>(color + 1);
            svg << "<rect x=\"" << kMarginLeft + plot_w - 150 << "\" y=\""
                << ly - 8 << "\" width=\"10\" height=\"3\" fill=\"" << stroke
                << "\"/>\n";
            svg << "<text x=\"" << kMarginLeft + plot_w - 135 << "\" y=\"" << ly
                << "\" font-family=\"sans-serif\" font-size=\"11\">"
                << escape_xml(s.label) << "</text>\n";
        }
        ++color;
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_line_chart(const std::string& path, const ChartSpec& spec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::input_parse_error, "cannot write '" + path + "'");
    }
    out << render_line_chart(spec);
}

}  // namespace maglab
