#pragma once

#include <string>
#include <vector>

#include "sentlab/grid.hpp"
#include "sentlab/signal.hpp"

namespace sentlab {

// diverging_corr: blue (negative) through white (zero) to red (positive),
// anchored at 0. pvalue_mask: white below alpha, grey scale above.
enum class Palette { diverging_corr, pvalue_mask };

struct Rgb {
    int r = 0, g = 0, b = 0;
    std::string hex() const;
};

Rgb correlation_color(double value);
Rgb pvalue_color(double p, double alpha);

struct HeatmapOptions {
    Palette palette = Palette::diverging_corr;
    double alpha = 0.01;  // mask threshold for the p-value palette
    std::string title;
    int cell_px = 12;
};

// Vector (SVG) heatmap with grid labels on both axes; undefined cells are
// hatched.
void render_heatmap(const GridLayer& layer, const HeatmapOptions& options,
                    const std::string& path);

struct SeriesPlotOptions {
    std::string title;
    int width = 900;
    int height = 240;
};

// Date-axis line plot; no-signal points break the line.
void render_signal_plot(const std::vector<CumulativePoint>& points,
                        const SeriesPlotOptions& options, const std::string& path);

// Daily scores from a sentiment series (no-signal days are gaps).
std::vector<CumulativePoint> daily_score_points(const SentimentSeries& series);

// Multi-line plot of y(x) curves sharing an integer x-axis (e.g. mean
// correlation per depth, one line per horizon).
struct CurvePlotOptions {
    std::string title;
    int width = 720;
    int height = 320;
};

void render_curve_plot(const std::vector<int>& x,
                       const std::vector<std::vector<std::optional<double>>>& curves,
                       const std::vector<std::string>& labels, const CurvePlotOptions& options,
                       const std::string& path);

}  // namespace sentlab
