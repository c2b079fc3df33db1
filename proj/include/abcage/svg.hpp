#pragma once

#include <string>
#include <vector>

namespace abcage {

// Decorative static plots; the numerical contract of the CLI lives in the
// CSV files, these just make the sweeps and heatmaps easy to eyeball.

struct ScatterSeries {
    std::string color;
    std::vector<std::pair<double, double>> points;
};

void svg_scatter(const std::string& path, const std::string& title,
                 const std::vector<ScatterSeries>& series);

// values[t][s] rendered as a site-by-time grid, darker = more intensity.
void svg_heatmap(const std::string& path, const std::string& title,
                 const std::vector<std::vector<double>>& values);

} // namespace abcage
