#include "sentlab/significance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "sentlab/errors.hpp"
#include "sentlab/stats.hpp"

namespace sentlab {

double corr_t_test(double r, long n) {
    if (n < 3) throw DataError("corr_t_test requires n >= 3");
    if (std::isnan(r) || std::fabs(r) > 1.0 + 1e-12)
        throw DataError("corr_t_test requires |r| <= 1");
    r = std::clamp(r, -1.0, 1.0);
    // t^2 = r^2 (n-2) / (1-r^2) gives df / (df + t^2) = 1 - r^2 exactly.
    return stats::incomplete_beta(0.5 * static_cast<double>(n - 2), 0.5, 1.0 - r * r);
}

std::vector<double> bh_fdr(const std::vector<double>& p_values) {
    for (double p : p_values)
        if (std::isnan(p) || p < 0.0 || p > 1.0)
            throw DataError("bh_fdr requires p-values in [0, 1]");

    const std::size_t m = p_values.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });

    std::vector<double> adjusted(m, 0.0);
    double running = 1.0;
    for (std::size_t k = m; k-- > 0;) {
        const double candidate =
            p_values[order[k]] * static_cast<double>(m) / static_cast<double>(k + 1);
        running = std::min(running, std::min(1.0, candidate));
        adjusted[order[k]] = running;
    }
    return adjusted;
}

GridLayer mitigate(const GridLayer& correlation, const GridLayer& p_layer) {
    if (!correlation.same_shape(p_layer))
        throw DataError("mitigate requires aligned correlation and p layers");
    GridLayer out = GridLayer::make(correlation.row_labels, correlation.col_labels);
    for (std::size_t k = 0; k < correlation.cells.size(); ++k) {
        const auto& rho = correlation.cells[k];
        const auto& p = p_layer.cells[k];
        if (rho && p) out.cells[k] = *rho * (1.0 - *p);
    }
    return out;
}

SignificanceGrid significance_grid(const CorrelationGrid& grid, double alpha,
                                   bool mitigation_uses_adjusted_p) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must be in (0, 1)");

    SignificanceGrid sig;
    sig.alpha = alpha;
    sig.mitigation_uses_adjusted_p = mitigation_uses_adjusted_p;
    sig.p_raw = GridLayer::make(grid.values.row_labels, grid.values.col_labels);
    sig.p_adjusted = GridLayer::make(grid.values.row_labels, grid.values.col_labels);
    sig.mask = GridLayer::make(grid.values.row_labels, grid.values.col_labels);

    std::vector<std::size_t> defined;
    std::vector<double> p_flat;
    for (std::size_t k = 0; k < grid.values.cells.size(); ++k) {
        const auto& rho = grid.values.cells[k];
        if (!rho) continue;
        defined.push_back(k);
        const double p = corr_t_test(*rho, grid.n[k]);
        sig.p_raw.cells[k] = p;
        p_flat.push_back(p);
    }

    const std::vector<double> adjusted = bh_fdr(p_flat);
    for (std::size_t i = 0; i < defined.size(); ++i) {
        sig.p_adjusted.cells[defined[i]] = adjusted[i];
        sig.mask.cells[defined[i]] = adjusted[i] < alpha ? 1.0 : 0.0;
    }

    sig.mitigated =
        mitigate(grid.values, mitigation_uses_adjusted_p ? sig.p_adjusted : sig.p_raw);
    return sig;
}

BestCombinations best_combinations(const CorrelationGrid& grid, const SignificanceGrid& sig,
                                   double alpha) {
    if (!grid.values.same_shape(sig.p_adjusted))
        throw DataError("correlation and significance grids are misaligned");

    BestCombinations best;
    best.market_id = grid.market_id;
    best.method = grid.method;
    best.alpha = alpha;

    for (std::size_t i = 0; i < grid.values.rows(); ++i) {
        for (std::size_t j = 0; j < grid.values.cols(); ++j) {
            const auto& rho = grid.values.at(i, j);
            const auto& padj = sig.p_adjusted.at(i, j);
            if (!rho || !padj || !(*padj < alpha)) continue;
            if (*rho > 0.0 && (!best.max_positive || *rho > best.max_positive->value))
                best.max_positive =
                    ExtremeCell{grid.depths()[i], grid.periods()[j], *rho};
            if (*rho < 0.0 && (!best.min_negative || *rho < best.min_negative->value))
                best.min_negative =
                    ExtremeCell{grid.depths()[i], grid.periods()[j], *rho};
        }
    }
    if (!best.max_positive && !best.min_negative)
        best.notice = "no cell significant at alpha = " + std::to_string(alpha);
    return best;
}

std::string best_combinations_json(const std::vector<BestCombinations>& reports) {
    using nlohmann::json;
    json out = json::array();
    for (const auto& r : reports) {
        json row;
        row["market"] = r.market_id;
        row["method"] = to_string(r.method);
        row["alpha"] = r.alpha;
        auto cell_json = [](const std::optional<ExtremeCell>& c) -> json {
            if (!c) return nullptr;
            return {{"score_depth", c->depth},
                    {"return_period", c->period},
                    {"correlation", c->value}};
        };
        row["highest_positive"] = cell_json(r.max_positive);
        row["lowest_negative"] = cell_json(r.min_negative);
        if (!r.notice.empty()) row["notice"] = r.notice;
        out.push_back(row);
    }
    return out.dump(2) + "\n";
}

}  // namespace sentlab
