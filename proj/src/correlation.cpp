#include "sentlab/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "sentlab/errors.hpp"
#include "sentlab/parallel.hpp"

namespace sentlab {

CorrMethod parse_corr_method(const std::string& name) {
    if (name == "pearson") return CorrMethod::pearson;
    if (name == "spearman") return CorrMethod::spearman;
    throw ConfigError("unknown correlation method '" + name + "'");
}

const char* to_string(CorrMethod method) {
    return method == CorrMethod::pearson ? "pearson" : "spearman";
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DataError("correlation inputs must have equal length");
    const std::size_t n = x.size();
    if (n < 3) throw DataError("correlation requires at least 3 observations");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    const double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double mean_rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DataError("correlation inputs must have equal length");
    if (x.size() < 3) throw DataError("correlation requires at least 3 observations");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson(rx, ry);
}

GridLayer CorrelationGrid::n_layer() const {
    GridLayer layer = GridLayer::make(values.row_labels, values.col_labels);
    for (std::size_t k = 0; k < n.size(); ++k)
        layer.cells[k] = static_cast<double>(n[k]);
    return layer;
}

std::vector<CumulativeScoreSeries> cumulative_family(const SentimentSeries& series,
                                                     const std::vector<int>& depths) {
    std::vector<CumulativeScoreSeries> family;
    family.reserve(depths.size());
    for (int d : depths) family.push_back(cumulative_series(series, d));
    return family;
}

CorrelationGrid build_grid(const std::vector<CumulativeScoreSeries>& family,
                           const ReturnGrid& ret, CorrMethod method, int threads) {
    if (family.empty()) throw DataError("empty cumulative-score family");
    if (ret.columns.empty()) throw DataError("empty return grid");

    std::vector<int> depths, periods;
    for (const auto& s : family) depths.push_back(s.depth);
    for (const auto& c : ret.columns) periods.push_back(c.period);

    // Shared date axis: every date seen on either side, densely indexed.
    std::unordered_map<int64_t, std::size_t> axis;
    auto intern = [&axis](Date d) {
        return axis.emplace(d.serial(), axis.size()).first->second;
    };
    for (const auto& s : family)
        for (const auto& p : s.points) intern(p.date);
    for (const auto& c : ret.columns)
        for (const auto& p : c.points) intern(p.stamp);
    const std::size_t axis_len = axis.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<std::vector<double>> score_rows(family.size(),
                                                std::vector<double>(axis_len, nan));
    for (std::size_t i = 0; i < family.size(); ++i)
        for (const auto& p : family[i].points)
            if (p.value) score_rows[i][axis.at(p.date.serial())] = *p.value;

    std::vector<std::vector<double>> return_cols(ret.columns.size(),
                                                 std::vector<double>(axis_len, nan));
    for (std::size_t j = 0; j < ret.columns.size(); ++j)
        for (const auto& p : ret.columns[j].points)
            return_cols[j][axis.at(p.stamp.serial())] = p.value;

    CorrelationGrid grid;
    grid.market_id = ret.market_id;
    grid.method = method;
    grid.alignment = ret.mode;
    grid.values = GridLayer::make(depths, periods);
    grid.n.assign(depths.size() * periods.size(), 0);

    const std::size_t cells = depths.size() * periods.size();
    parallel_for(cells, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> x, y;
        for (std::size_t cell = begin; cell < end; ++cell) {
            const std::size_t i = cell / periods.size();
            const std::size_t j = cell % periods.size();
            const auto& xs = score_rows[i];
            const auto& ys = return_cols[j];
            x.clear();
            y.clear();
            for (std::size_t t = 0; t < axis_len; ++t) {
                if (std::isnan(xs[t]) || std::isnan(ys[t])) continue;
                x.push_back(xs[t]);
                y.push_back(ys[t]);
            }
            grid.n[cell] = static_cast<int>(x.size());
            if (x.size() < 3) continue;
            grid.values.cells[cell] =
                method == CorrMethod::pearson ? pearson(x, y) : spearman(x, y);
        }
    });

    if (*std::max_element(grid.n.begin(), grid.n.end()) == 0)
        throw DataError("no overlapping dates between scores and returns");
    return grid;
}

}  // namespace sentlab
