#include "abcage/svg.hpp"

#include "abcage/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace abcage {

namespace {

constexpr int width = 720;
constexpr int height = 480;
constexpr int margin = 50;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string svg_open(const std::string& title) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(width) + "\" height=\"" +
                    std::to_string(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + std::to_string(width / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + title + "</text>\n";
    return s;
}

} // namespace

void svg_scatter(const std::string& path, const std::string& title,
                 const std::vector<ScatterSeries>& series) {
    double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
    }
    if (xmin > xmax) { xmin = 0; xmax = 1; }
    if (ymin > ymax) { ymin = 0; ymax = 1; }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) { ymax += 0.5; ymin -= 0.5; }

    auto px = [&](double x) {
        return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
    };
    auto py = [&](double y) {
        return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
    };

    std::string svg = svg_open(title);
    svg += "<rect x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(margin) +
           "\" width=\"" + std::to_string(width - 2 * margin) + "\" height=\"" +
           std::to_string(height - 2 * margin) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    for (const auto& s : series)
        for (const auto& [x, y] : s.points)
            svg += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) +
                   "\" r=\"2\" fill=\"" + s.color + "\"/>\n";
    svg += "</svg>\n";
    write_file_atomic(path, svg);
}

void svg_heatmap(const std::string& path, const std::string& title,
                 const std::vector<std::vector<double>>& values) {
    std::string svg = svg_open(title);
    if (!values.empty() && !values[0].empty()) {
        const int nt = static_cast<int>(values.size());
        const int ns = static_cast<int>(values[0].size());
        double vmax = 0.0;
        for (const auto& row : values)
            for (double v : row) vmax = std::max(vmax, v);
        if (vmax <= 0.0) vmax = 1.0;
        const double cw = double(width - 2 * margin) / nt;
        const double ch = double(height - 2 * margin) / ns;
        for (int t = 0; t < nt; ++t) {
            for (int s = 0; s < ns; ++s) {
                const int shade =
                    255 - static_cast<int>(std::lround(255.0 * values[t][s] / vmax));
                char color[8];
                std::snprintf(color, sizeof(color), "#%02x%02x%02x", shade, shade, 255);
                svg += "<rect x=\"" + num(margin + t * cw) + "\" y=\"" +
                       num(margin + s * ch) + "\" width=\"" + num(cw + 0.5) +
                       "\" height=\"" + num(ch + 0.5) + "\" fill=\"" + color +
                       "\"/>\n";
            }
        }
    }
    svg += "</svg>\n";
    write_file_atomic(path, svg);
}

} // namespace abcage
