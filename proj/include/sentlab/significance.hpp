#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sentlab/correlation.hpp"
#include "sentlab/grid.hpp"

namespace sentlab {

// Two-tailed p-value for a correlation of r over n samples,
// t = r * sqrt((n-2) / (1-r^2)) against Student with n-2 df.
double corr_t_test(double r, long n);

// Benjamini-Hochberg step-up adjusted p-values, positions preserved.
std::vector<double> bh_fdr(const std::vector<double>& p_values);

// Elementwise rho * (1 - p); undefined cells stay undefined.
GridLayer mitigate(const GridLayer& correlation, const GridLayer& p_layer);

struct SignificanceGrid {
    double alpha = 0.01;
    bool mitigation_uses_adjusted_p = false;
    GridLayer p_raw;
    GridLayer p_adjusted;  // adjusted >= raw cellwise
    GridLayer mitigated;
    GridLayer mask;  // 1 where adjusted p < alpha, 0 otherwise; undefined propagates
};

SignificanceGrid significance_grid(const CorrelationGrid& grid, double alpha,
                                   bool mitigation_uses_adjusted_p = false);

struct ExtremeCell {
    int depth = 0;
    int period = 0;
    double value = 0.0;
};

// Strongest significant cells (adjusted p < alpha), mirroring the score /
// market(period) / value table rows.
struct BestCombinations {
    std::string market_id;
    CorrMethod method = CorrMethod::pearson;
    double alpha = 0.01;
    std::optional<ExtremeCell> max_positive;
    std::optional<ExtremeCell> min_negative;
    std::string notice;  // set when no cell is significant
};

BestCombinations best_combinations(const CorrelationGrid& grid, const SignificanceGrid& sig,
                                   double alpha);

std::string best_combinations_json(const std::vector<BestCombinations>& reports);

}  // namespace sentlab
