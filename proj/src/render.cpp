#include "sentlab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "sentlab/errors.hpp"

namespace sentlab {

namespace {

int lerp(int a, int b, double t) {
    return static_cast<int>(std::lround(a + (b - a) * t));
}

std::string svg_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string Rgb::hex() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

Rgb correlation_color(double value) {
    // RdBu-style diverging ramp centered at 0.
    const Rgb blue{33, 102, 172};
    const Rgb white{247, 247, 247};
    const Rgb red{178, 24, 43};
    const double v = std::clamp(value, -1.0, 1.0);
    if (v < 0.0) {
        const double t = -v;
        return {lerp(white.r, blue.r, t), lerp(white.g, blue.g, t), lerp(white.b, blue.b, t)};
    }
    return {lerp(white.r, red.r, v), lerp(white.g, red.g, v), lerp(white.b, red.b, v)};
}

Rgb pvalue_color(double p, double alpha) {
    if (p < alpha) return {255, 255, 255};
    // Grey scale: light just above alpha, dark at p = 1.
    const double t = (std::clamp(p, alpha, 1.0) - alpha) / (1.0 - alpha);
    const int level = lerp(210, 40, t);
    return {level, level, level};
}

void render_heatmap(const GridLayer& layer, const HeatmapOptions& options,
                    const std::string& path) {
    if (layer.rows() == 0 || layer.cols() == 0) throw DataError("cannot render empty grid");

    const int cell = options.cell_px;
    const int margin_left = 64;
    const int margin_top = options.title.empty() ? 24 : 44;
    const int margin_bottom = 40;
    const int width = margin_left + cell * static_cast<int>(layer.cols()) + 16;
    const int height = margin_top + cell * static_cast<int>(layer.rows()) + margin_bottom;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<defs><pattern id=\"undef\" width=\"6\" height=\"6\" "
           "patternUnits=\"userSpaceOnUse\"><rect width=\"6\" height=\"6\" fill=\"#eeeeee\"/>"
           "<path d=\"M0,6 L6,0\" stroke=\"#999999\" stroke-width=\"1\"/></pattern></defs>\n";
    if (!options.title.empty())
        out << "<text x=\"" << margin_left << "\" y=\"20\" font-family=\"sans-serif\" "
            << "font-size=\"14\">" << svg_escape(options.title) << "</text>\n";

    for (std::size_t i = 0; i < layer.rows(); ++i) {
        for (std::size_t j = 0; j < layer.cols(); ++j) {
            const int x = margin_left + static_cast<int>(j) * cell;
            const int y = margin_top + static_cast<int>(i) * cell;
            const auto& c = layer.at(i, j);
            std::string fill;
            if (!c) {
                fill = "url(#undef)";
            } else if (options.palette == Palette::diverging_corr) {
                fill = correlation_color(*c).hex();
            } else {
                fill = pvalue_color(*c, options.alpha).hex();
            }
            out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << fill << "\"/>\n";
        }
    }

    // Axis labels, thinned to roughly every fifth entry.
    const std::size_t row_step = std::max<std::size_t>(1, layer.rows() / 10);
    for (std::size_t i = 0; i < layer.rows(); i += row_step) {
        out << "<text x=\"" << margin_left - 6 << "\" y=\""
            << margin_top + static_cast<int>(i) * cell + cell - 2
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"9\">cum_"
            << layer.row_labels[i] << "</text>\n";
    }
    const std::size_t col_step = std::max<std::size_t>(1, layer.cols() / 10);
    for (std::size_t j = 0; j < layer.cols(); j += col_step) {
        const int x = margin_left + static_cast<int>(j) * cell + cell / 2;
        const int y = margin_top + cell * static_cast<int>(layer.rows()) + 14;
        out << "<text x=\"" << x << "\" y=\"" << y
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"9\">ret_"
            << layer.col_labels[j] << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw IoError("short write: " + path);
}

std::vector<CumulativePoint> daily_score_points(const SentimentSeries& series) {
    std::vector<CumulativePoint> points;
    points.reserve(series.days.size());
    for (const auto& d : series.days) points.push_back({d.date, d.score});
    return points;
}

void render_signal_plot(const std::vector<CumulativePoint>& points,
                        const SeriesPlotOptions& options, const std::string& path) {
    if (points.empty()) throw DataError("cannot render an empty series");

    const int margin_left = 48;
    const int margin_top = options.title.empty() ? 16 : 36;
    const int margin_bottom = 28;
    const int plot_w = options.width - margin_left - 16;
    const int plot_h = options.height - margin_top - margin_bottom;

    const int64_t t0 = points.front().date.serial();
    const int64_t t1 = std::max(points.back().date.serial(), t0 + 1);
    auto x_of = [&](Date d) {
        return margin_left +
               plot_w * static_cast<double>(d.serial() - t0) / static_cast<double>(t1 - t0);
    };
    auto y_of = [&](double v) {
        return margin_top + plot_h * (1.0 - (std::clamp(v, -1.0, 1.0) + 1.0) / 2.0);
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
        << options.height << "\">\n";
    if (!options.title.empty())
        out << "<text x=\"" << margin_left << "\" y=\"20\" font-family=\"sans-serif\" "
            << "font-size=\"13\">" << svg_escape(options.title) << "</text>\n";

    // Zero line and bounds.
    for (double level : {-1.0, 0.0, 1.0}) {
        const double y = y_of(level);
        out << "<line x1=\"" << margin_left << "\" y1=\"" << y << "\" x2=\""
            << margin_left + plot_w << "\" y2=\"" << y
            << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << margin_left - 6 << "\" y=\"" << y + 3
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"9\">" << level
            << "</text>\n";
    }

    // Polyline segments; a no-signal point breaks the line.
    std::string segment;
    std::size_t segments = 0;
    auto flush = [&] {
        if (!segment.empty()) {
            out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" points=\""
                << segment << "\"/>\n";
            ++segments;
        }
        segment.clear();
    };
    char buf[64];
    for (const auto& p : points) {
        if (!p.value) {
            flush();
            continue;
        }
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", x_of(p.date), y_of(*p.value));
        segment += buf;
    }
    flush();

    // Year ticks.
    int last_year = -1;
    for (const auto& p : points) {
        const int year = std::stoi(p.date.iso().substr(0, 4));
        if (year == last_year) continue;
        last_year = year;
        const double x = x_of(p.date);
        out << "<text x=\"" << x << "\" y=\"" << options.height - 8
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"9\">" << year
            << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw IoError("short write: " + path);
}

}  // namespace sentlab
