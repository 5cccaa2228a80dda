#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sentlab/grid.hpp"

namespace sentlab {

// Per-market correlation value layers with identical labels.
struct MarketMatrixSet {
    std::vector<std::string> market_ids;
    std::vector<GridLayer> layers;

    static MarketMatrixSet make(std::vector<std::string> ids, std::vector<GridLayer> layers);
    std::size_t size() const { return layers.size(); }
};

// Cellwise mean across markets; undefined if undefined in any market.
GridLayer mean_matrix(const MarketMatrixSet& set);

// Cellwise sample standard deviation (divisor n - 1).
GridLayer std_matrix(const MarketMatrixSet& set, const GridLayer& mean);

struct ElementwiseT {
    GridLayer t_stats;   // (M - Z) / Sigma; undefined where Sigma == 0
    GridLayer p_values;  // two-tailed Student p, df = n_markets - 1
    GridLayer p_paper;   // printed-formula variant 1 - 2*(1 - CDF(|T|))
};

ElementwiseT elementwise_t(const GridLayer& market, const GridLayer& mean,
                           const GridLayer& stddev, int n_markets);

// 100 * significant / defined; throws DataError when no cell is defined.
double pattern_percentage(const GridLayer& p_values, double alpha);

enum class QuantileRank { rank_over_n, centered };  // rank/N or (rank-0.5)/N

// Each defined cell replaced by its quantile rank within the matrix;
// ties get the average rank.
GridLayer quantile_transform(const GridLayer& matrix,
                             QuantileRank convention = QuantileRank::rank_over_n);

struct QuantileDistance {
    double mean_abs_diff = 0.0;  // over cells defined in both
    GridLayer abs_diff;
    double within_pct = 0.0;     // % of cells with |dQ| <= tau
    double beyond_pct = 0.0;     // complement, 100 - within
};

QuantileDistance quantile_distance(const GridLayer& a, const GridLayer& b, double tau,
                                   QuantileRank convention = QuantileRank::rank_over_n);

struct RobustnessOptions {
    double alpha = 0.01;
    double tau = 0.10;
    bool zscore_preprocess = false;  // optional pre-pass; doubles the Eq.-style scaling
    QuantileRank quantile_rank = QuantileRank::rank_over_n;
};

struct MarketRobustness {
    std::string market_id;
    GridLayer t_stats;
    GridLayer p_values;
    GridLayer p_paper;
    std::optional<double> t_pattern_pct;  // empty when every T cell is undefined
    GridLayer quantile_abs_diff;
    double quantile_distance = 0.0;
    double quantile_within_pct = 0.0;
    double quantile_beyond_pct = 0.0;
};

struct RobustnessReport {
    RobustnessOptions options;
    int n_markets = 0;
    GridLayer mean;
    GridLayer stddev;
    std::size_t undefined_mean_cells = 0;
    std::vector<MarketRobustness> markets;
};

RobustnessReport robustness_report(const MarketMatrixSet& set, const RobustnessOptions& options);

std::string robustness_json(const RobustnessReport& report);

}  // namespace sentlab
