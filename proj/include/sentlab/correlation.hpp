#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sentlab/grid.hpp"
#include "sentlab/market.hpp"
#include "sentlab/signal.hpp"

namespace sentlab {

enum class CorrMethod { pearson, spearman };

CorrMethod parse_corr_method(const std::string& name);
const char* to_string(CorrMethod method);

// Product-moment coefficient; empty on zero variance. Requires n >= 3.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

// Pearson over average-fractional ranks (ties get the mean of their positions).
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

// Average-rank transform used by spearman; ranks start at 1.
std::vector<double> average_ranks(std::span<const double> values);

struct CorrelationGrid {
    std::string market_id;
    CorrMethod method = CorrMethod::pearson;
    GridLayer values;             // row = depth d, col = period p
    std::vector<int> n;           // per-cell aligned sample size, row-major
    AlignmentMode alignment = AlignmentMode::forward;

    const std::vector<int>& depths() const { return values.row_labels; }
    const std::vector<int>& periods() const { return values.col_labels; }
    GridLayer n_layer() const;
};

std::vector<CumulativeScoreSeries> cumulative_family(const SentimentSeries& series,
                                                     const std::vector<int>& depths);

// Inner join of score dates and return stamps per cell; no-signal scores and
// missing returns drop the date. Cells need n >= 3 and nonzero variance.
CorrelationGrid build_grid(const std::vector<CumulativeScoreSeries>& family,
                           const ReturnGrid& returns, CorrMethod method, int threads = 0);

}  // namespace sentlab
