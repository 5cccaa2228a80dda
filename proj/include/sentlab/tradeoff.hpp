#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sentlab/correlation.hpp"

namespace sentlab {

// Mean-correlation-vs-depth curves per prediction horizon, and the depth
// maximizing each curve.
struct TradeoffCurve {
    std::string market_id;
    CorrMethod method = CorrMethod::pearson;
    int step = 4;                // s, return columns per month
    std::vector<int> depths;     // row labels of the source grid
    std::vector<int> horizons;   // months, 1-based (j + 1)
    std::vector<std::vector<std::optional<double>>> mean_by_horizon;  // [horizon][depth]
    std::vector<std::optional<int>> d_opt;  // per horizon; empty when all-undefined
};

// Per-depth mean of the first s*(j+1) return columns; undefined cells are
// excluded with matching count reduction. j is the 0-based month index.
std::vector<std::optional<double>> mean_horizon_correlation(const CorrelationGrid& grid,
                                                            int month_index, int step);

// Depth with maximal mean correlation; ties break toward the smallest depth.
std::optional<int> optimal_depth(const std::vector<std::optional<double>>& curve,
                                 const std::vector<int>& depths);

// Curves for every horizon the grid can support, up to `max_months`.
TradeoffCurve build_tradeoff(const CorrelationGrid& grid, int step, int max_months = 12);

void write_tradeoff_csv(const TradeoffCurve& curve, const std::string& path);

// Table of per-market optimal depths at a fixed horizon.
std::string d_opt_table_json(const std::vector<TradeoffCurve>& curves, int horizon_months);

}  // namespace sentlab
