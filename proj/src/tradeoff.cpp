#include "sentlab/tradeoff.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "sentlab/csv.hpp"
#include "sentlab/errors.hpp"

namespace sentlab {

std::vector<std::optional<double>> mean_horizon_correlation(const CorrelationGrid& grid,
                                                            int month_index, int step) {
    if (step < 1) throw DataError("step s must be >= 1");
    if (month_index < 0) throw DataError("month index must be >= 0");
    const std::size_t span = static_cast<std::size_t>(step) *
                             (static_cast<std::size_t>(month_index) + 1);
    if (span > grid.values.cols())
        throw DataError("horizon needs " + std::to_string(span) + " return columns, grid has " +
                        std::to_string(grid.values.cols()));

    std::vector<std::optional<double>> out(grid.values.rows());
    for (std::size_t i = 0; i < grid.values.rows(); ++i) {
        double sum = 0.0;
        std::size_t count = 0;
        for (std::size_t j = 0; j < span; ++j) {
            const auto& cell = grid.values.at(i, j);
            if (!cell) continue;
            sum += *cell;
            ++count;
        }
        if (count > 0) out[i] = sum / static_cast<double>(count);
    }
    return out;
}

std::optional<int> optimal_depth(const std::vector<std::optional<double>>& curve,
                                 const std::vector<int>& depths) {
    if (curve.empty()) throw DataError("empty trade-off curve");
    if (curve.size() != depths.size())
        throw DataError("curve and depth grid lengths differ");

    std::optional<int> best;
    double best_value = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (!curve[i]) continue;
        if (!best || *curve[i] > best_value) {
            best = depths[i];
            best_value = *curve[i];
        }
    }
    return best;  // empty when the whole curve is undefined
}

TradeoffCurve build_tradeoff(const CorrelationGrid& grid, int step, int max_months) {
    if (step < 1) throw DataError("step s must be >= 1");
    const int supported =
        static_cast<int>(grid.values.cols() / static_cast<std::size_t>(step));
    const int months = std::min(max_months, supported);
    if (months < 1)
        throw DataError("grid has too few return columns for one horizon at s = " +
                        std::to_string(step));

    TradeoffCurve curve;
    curve.market_id = grid.market_id;
    curve.method = grid.method;
    curve.step = step;
    curve.depths = grid.depths();
    for (int j = 0; j < months; ++j) {
        curve.horizons.push_back(j + 1);
        curve.mean_by_horizon.push_back(mean_horizon_correlation(grid, j, step));
        curve.d_opt.push_back(optimal_depth(curve.mean_by_horizon.back(), curve.depths));
    }
    return curve;
}

void write_tradeoff_csv(const TradeoffCurve& curve, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);

    std::vector<std::string> header{"depth"};
    for (int h : curve.horizons) header.push_back("mean_corr_m" + std::to_string(h));
    csv::write_row(out, header);

    for (std::size_t i = 0; i < curve.depths.size(); ++i) {
        std::vector<std::string> row{std::to_string(curve.depths[i])};
        for (std::size_t h = 0; h < curve.horizons.size(); ++h) {
            const auto& v = curve.mean_by_horizon[h][i];
            row.push_back(v ? csv::format_double(*v) : "");
        }
        csv::write_row(out, row);
    }
    if (!out) throw IoError("short write: " + path);
}

std::string d_opt_table_json(const std::vector<TradeoffCurve>& curves, int horizon_months) {
    using nlohmann::json;
    json out;
    out["horizon_months"] = horizon_months;
    out["entries"] = json::array();
    for (const auto& curve : curves) {
        const auto it = std::find(curve.horizons.begin(), curve.horizons.end(), horizon_months);
        if (it == curve.horizons.end())
            throw DataError("curve for " + curve.market_id + " lacks horizon " +
                            std::to_string(horizon_months));
        const std::size_t h = static_cast<std::size_t>(it - curve.horizons.begin());
        json row;
        row["market"] = curve.market_id;
        row["method"] = to_string(curve.method);
        if (curve.d_opt[h])
            row["d_opt"] = *curve.d_opt[h];
        else
            row["d_opt"] = nullptr;
        out["entries"].push_back(row);
    }
    return out.dump(2) + "\n";
}

}  // namespace sentlab
