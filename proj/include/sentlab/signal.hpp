#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sentlab/calendar.hpp"
#include "sentlab/llm_backend.hpp"

namespace sentlab {

struct DailySentiment {
    Date date;
    long n_pos = 0;
    long n_neg = 0;
    long n_indecisive = 0;
    std::optional<double> score;  // (pos - neg) / (pos + neg); empty when pos + neg == 0
};

struct SentimentSeries {
    std::vector<DailySentiment> days;  // dates strictly increasing
    std::string corpus_id;
    std::string model_id;
};

struct CumulativePoint {
    Date date;
    std::optional<double> value;
};

// Rolling ratio over the most recent `depth` series entries ending at each date.
struct CumulativeScoreSeries {
    int depth = 1;
    std::vector<CumulativePoint> points;
};

// No-signal (empty) when n_pos + n_neg == 0; never an error.
std::optional<double> daily_score(long n_pos, long n_neg);

DailySentiment make_daily(Date date, long n_pos, long n_neg, long n_indecisive);

SentimentSeries make_series(std::vector<DailyCounts> counts, std::string corpus_id,
                            std::string model_id);

// Ratio of window sums over the `depth` most recent entries ending at `t`.
std::optional<double> cumulative_score(const SentimentSeries& series, int depth, Date t);

// One point per input date having at least `depth` prior-or-equal entries;
// empty (with no points) when depth exceeds the series length.
CumulativeScoreSeries cumulative_series(const SentimentSeries& series, int depth);

SentimentSeries load_sentiments_csv(const std::string& path);
void write_sentiments_csv(const SentimentSeries& series, const std::string& path);

// Columns date,value; the value field is empty for no-signal points.
void write_signal_csv(const CumulativeScoreSeries& series, const std::string& path);

// Display convention: scores shown at two decimals, storage keeps full precision.
std::string display_score(double value);

}  // namespace sentlab
