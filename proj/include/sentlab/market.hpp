#pragma once

#include <string>
#include <vector>

#include "sentlab/calendar.hpp"

namespace sentlab {

// Conventional market labels; any non-empty id is accepted.
inline const std::vector<std::string>& default_markets() {
    static const std::vector<std::string> ids = {"US_Tech", "US",     "Japan",
                                                 "Europe",  "UK", "Emerging"};
    return ids;
}

struct PricePoint {
    Date date;
    double close = 0.0;  // index points, > 0
};

struct PriceSeries {
    std::string market_id;
    std::vector<PricePoint> points;  // dates strictly increasing
};

// How a period return is associated to a date.
//  paper_stamp: (P_t - P_{t-p}) / P_{t-p}, stamped the trading day after t,
//               so every price used is dated on or before the stamp.
//  forward:     (P_{t+p} - P_t) / P_t, associated to the signal date t for
//               prediction studies; available only once P_{t+p} is known.
enum class AlignmentMode { paper_stamp, forward };

AlignmentMode parse_alignment_mode(const std::string& name);
const char* to_string(AlignmentMode mode);

struct ReturnPoint {
    Date stamp;
    double value = 0.0;
    Date latest_input_date;  // most recent price date used
};

struct ReturnSeries {
    int period = 0;
    std::vector<ReturnPoint> points;
};

struct ReturnGrid {
    std::string market_id;
    AlignmentMode mode = AlignmentMode::forward;
    std::vector<ReturnSeries> columns;  // one per period, ascending
};

// CSV with header date,close. Unsorted rows are sorted with a warning.
PriceSeries load_prices(const std::string& path, std::string market_id,
                        std::vector<std::string>* warnings = nullptr);

ReturnSeries returns(const PriceSeries& series, int period, AlignmentMode mode);

ReturnGrid build_return_grid(const PriceSeries& series, const std::vector<int>& periods,
                             AlignmentMode mode, int threads = 0);

// Header: date,ret_p{period},...; empty field where a column has no value.
void write_return_grid_csv(const ReturnGrid& grid, const std::string& path);
ReturnGrid read_return_grid_csv(const std::string& path, std::string market_id,
                                AlignmentMode mode);

void write_prices_csv(const PriceSeries& series, const std::string& path);

}  // namespace sentlab
