#include "sentlab/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "sentlab/errors.hpp"
#include "sentlab/stats.hpp"

namespace sentlab {

MarketMatrixSet MarketMatrixSet::make(std::vector<std::string> ids,
                                      std::vector<GridLayer> layers) {
    if (ids.size() != layers.size())
        throw DataError("market ids and layers must pair up");
    if (layers.size() < 2) throw DataError("robustness needs at least 2 markets");
    for (std::size_t k = 1; k < layers.size(); ++k)
        if (!layers[k].same_shape(layers[0]))
            throw DataError("market matrix shape mismatch for " + ids[k]);
    MarketMatrixSet set;
    set.market_ids = std::move(ids);
    set.layers = std::move(layers);
    return set;
}

GridLayer mean_matrix(const MarketMatrixSet& set) {
    GridLayer z = GridLayer::make(set.layers[0].row_labels, set.layers[0].col_labels);
    for (std::size_t c = 0; c < z.cells.size(); ++c) {
        double sum = 0.0;
        bool defined = true;
        for (const auto& layer : set.layers) {
            if (!layer.cells[c]) {
                defined = false;
                break;
            }
            sum += *layer.cells[c];
        }
        if (defined) z.cells[c] = sum / static_cast<double>(set.size());
    }
    return z;
}

GridLayer std_matrix(const MarketMatrixSet& set, const GridLayer& mean) {
    if (!mean.same_shape(set.layers[0]))
        throw DataError("mean matrix shape mismatch");
    GridLayer sigma = GridLayer::make(mean.row_labels, mean.col_labels);
    for (std::size_t c = 0; c < sigma.cells.size(); ++c) {
        if (!mean.cells[c]) continue;
        double ss = 0.0;
        bool defined = true;
        for (const auto& layer : set.layers) {
            if (!layer.cells[c]) {
                defined = false;
                break;
            }
            const double dev = *layer.cells[c] - *mean.cells[c];
            ss += dev * dev;
        }
        if (defined)
            sigma.cells[c] = std::sqrt(ss / static_cast<double>(set.size() - 1));
    }
    return sigma;
}

ElementwiseT elementwise_t(const GridLayer& market, const GridLayer& mean,
                           const GridLayer& stddev, int n_markets) {
    if (!market.same_shape(mean) || !market.same_shape(stddev))
        throw DataError("elementwise_t layers are misaligned");
    if (n_markets < 2) throw DataError("elementwise_t requires n >= 2 markets");
    const double df = static_cast<double>(n_markets - 1);

    ElementwiseT out;
    out.t_stats = GridLayer::make(market.row_labels, market.col_labels);
    out.p_values = GridLayer::make(market.row_labels, market.col_labels);
    out.p_paper = GridLayer::make(market.row_labels, market.col_labels);
    for (std::size_t c = 0; c < market.cells.size(); ++c) {
        if (!market.cells[c] || !mean.cells[c] || !stddev.cells[c]) continue;
        if (!(*stddev.cells[c] > 0.0)) continue;  // zero-spread cells stay undefined
        const double t = (*market.cells[c] - *mean.cells[c]) / *stddev.cells[c];
        out.t_stats.cells[c] = t;
        out.p_values.cells[c] = stats::student_two_tailed_p(t, df);
        out.p_paper.cells[c] = stats::student_central_mass(t, df);
    }
    return out;
}

double pattern_percentage(const GridLayer& p_values, double alpha) {
    std::size_t defined = 0, significant = 0;
    for (const auto& cell : p_values.cells) {
        if (!cell) continue;
        ++defined;
        if (*cell < alpha) ++significant;
    }
    if (defined == 0) throw DataError("pattern_percentage: no defined p-value cells");
    return 100.0 * static_cast<double>(significant) / static_cast<double>(defined);
}

GridLayer quantile_transform(const GridLayer& matrix, QuantileRank convention) {
    std::vector<std::size_t> defined;
    for (std::size_t c = 0; c < matrix.cells.size(); ++c)
        if (matrix.cells[c]) defined.push_back(c);
    if (defined.empty()) throw DataError("quantile_transform: no defined cells");

    std::sort(defined.begin(), defined.end(), [&](std::size_t a, std::size_t b) {
        return *matrix.cells[a] < *matrix.cells[b];
    });

    GridLayer q = GridLayer::make(matrix.row_labels, matrix.col_labels);
    const double n = static_cast<double>(defined.size());
    std::size_t i = 0;
    while (i < defined.size()) {
        std::size_t j = i;
        while (j + 1 < defined.size() &&
               *matrix.cells[defined[j + 1]] == *matrix.cells[defined[i]])
            ++j;
        double rank = 0.5 * static_cast<double>(i + j) + 1.0;  // average rank, 1-based
        if (convention == QuantileRank::centered) rank -= 0.5;
        for (std::size_t k = i; k <= j; ++k) q.cells[defined[k]] = rank / n;
        i = j + 1;
    }
    return q;
}

QuantileDistance quantile_distance(const GridLayer& a, const GridLayer& b, double tau,
                                   QuantileRank convention) {
    if (!a.same_shape(b)) throw DataError("quantile_distance requires matching shapes");
    const GridLayer qa = quantile_transform(a, convention);
    const GridLayer qb = quantile_transform(b, convention);

    QuantileDistance out;
    out.abs_diff = GridLayer::make(a.row_labels, a.col_labels);
    double sum = 0.0;
    std::size_t count = 0, within = 0;
    for (std::size_t c = 0; c < qa.cells.size(); ++c) {
        if (!qa.cells[c] || !qb.cells[c]) continue;
        const double d = std::fabs(*qa.cells[c] - *qb.cells[c]);
        out.abs_diff.cells[c] = d;
        sum += d;
        ++count;
        if (d <= tau) ++within;
    }
    if (count == 0) throw DataError("quantile_distance: no cells defined in both matrices");
    out.mean_abs_diff = sum / static_cast<double>(count);
    out.within_pct = 100.0 * static_cast<double>(within) / static_cast<double>(count);
    out.beyond_pct = 100.0 - out.within_pct;
    return out;
}

namespace {

MarketMatrixSet zscore_set(const MarketMatrixSet& set) {
    const GridLayer z = mean_matrix(set);
    const GridLayer sigma = std_matrix(set, z);
    MarketMatrixSet out = set;
    for (auto& layer : out.layers) {
        for (std::size_t c = 0; c < layer.cells.size(); ++c) {
            if (!layer.cells[c] || !z.cells[c] || !sigma.cells[c] || !(*sigma.cells[c] > 0.0)) {
                layer.cells[c] = std::nullopt;
                continue;
            }
            layer.cells[c] = (*layer.cells[c] - *z.cells[c]) / *sigma.cells[c];
        }
    }
    return out;
}

}  // namespace

RobustnessReport robustness_report(const MarketMatrixSet& input,
                                   const RobustnessOptions& options) {
    if (!(options.alpha > 0.0 && options.alpha < 1.0))
        throw ConfigError("alpha must be in (0, 1)");
    if (!(options.tau > 0.0 && options.tau < 1.0))
        throw ConfigError("tau must be in (0, 1)");

    const MarketMatrixSet set = options.zscore_preprocess ? zscore_set(input) : input;

    RobustnessReport report;
    report.options = options;
    report.n_markets = static_cast<int>(set.size());
    report.mean = mean_matrix(set);
    report.stddev = std_matrix(set, report.mean);
    report.undefined_mean_cells = report.mean.cells.size() - report.mean.defined_count();

    for (std::size_t k = 0; k < set.size(); ++k) {
        MarketRobustness mr;
        mr.market_id = set.market_ids[k];
        ElementwiseT et = elementwise_t(set.layers[k], report.mean, report.stddev,
                                        report.n_markets);
        mr.t_stats = std::move(et.t_stats);
        mr.p_values = std::move(et.p_values);
        mr.p_paper = std::move(et.p_paper);
        if (mr.p_values.defined_count() > 0)
            mr.t_pattern_pct = pattern_percentage(mr.p_values, options.alpha);

        QuantileDistance qd =
            quantile_distance(set.layers[k], report.mean, options.tau, options.quantile_rank);
        mr.quantile_abs_diff = std::move(qd.abs_diff);
        mr.quantile_distance = qd.mean_abs_diff;
        mr.quantile_within_pct = qd.within_pct;
        mr.quantile_beyond_pct = qd.beyond_pct;
        report.markets.push_back(std::move(mr));
    }
    return report;
}

std::string robustness_json(const RobustnessReport& report) {
    using nlohmann::json;
    json out;
    out["n_markets"] = report.n_markets;
    out["alpha"] = report.options.alpha;
    out["tau"] = report.options.tau;
    out["zscore_preprocess"] = report.options.zscore_preprocess;
    out["quantile_rank"] =
        report.options.quantile_rank == QuantileRank::rank_over_n ? "rank_over_n" : "centered";
    out["undefined_mean_cells"] = report.undefined_mean_cells;
    out["markets"] = json::array();
    for (const auto& m : report.markets) {
        json row;
        row["market"] = m.market_id;
        if (m.t_pattern_pct)
            row["t_test_pattern_pct"] = *m.t_pattern_pct;
        else
            row["t_test_pattern_pct"] = nullptr;
        row["quantile_distance"] = m.quantile_distance;
        row["quantile_within_pct"] = m.quantile_within_pct;
        row["quantile_beyond_pct"] = m.quantile_beyond_pct;
        out["markets"].push_back(row);
    }
    return out.dump(2) + "\n";
}

}  // namespace sentlab
