#include "sentlab/signal.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "sentlab/csv.hpp"
#include "sentlab/errors.hpp"

namespace sentlab {

std::optional<double> daily_score(long n_pos, long n_neg) {
    if (n_pos < 0 || n_neg < 0) throw DataError("sentiment counts must be non-negative");
    const long den = n_pos + n_neg;
    if (den == 0) return std::nullopt;
    return static_cast<double>(n_pos - n_neg) / static_cast<double>(den);
}

DailySentiment make_daily(Date date, long n_pos, long n_neg, long n_indecisive) {
    if (n_indecisive < 0) throw DataError("sentiment counts must be non-negative");
    DailySentiment d;
    d.date = date;
    d.n_pos = n_pos;
    d.n_neg = n_neg;
    d.n_indecisive = n_indecisive;
    d.score = daily_score(n_pos, n_neg);
    return d;
}

SentimentSeries make_series(std::vector<DailyCounts> counts, std::string corpus_id,
                            std::string model_id) {
    std::sort(counts.begin(), counts.end(),
              [](const DailyCounts& a, const DailyCounts& b) { return a.date < b.date; });
    SentimentSeries series;
    series.corpus_id = std::move(corpus_id);
    series.model_id = std::move(model_id);
    series.days.reserve(counts.size());
    for (const auto& c : counts) {
        if (!series.days.empty() && !(series.days.back().date < c.date))
            throw DataError("sentiment series dates must be strictly increasing");
        series.days.push_back(make_daily(c.date, c.n_pos, c.n_neg, c.n_indecisive));
    }
    return series;
}

namespace {

std::optional<double> window_score(long pos_sum, long neg_sum) {
    const long den = pos_sum + neg_sum;
    if (den == 0) return std::nullopt;
    return static_cast<double>(pos_sum - neg_sum) / static_cast<double>(den);
}

}  // namespace

std::optional<double> cumulative_score(const SentimentSeries& series, int depth, Date t) {
    if (depth < 1) throw DataError("depth must be >= 1");
    const auto it = std::lower_bound(
        series.days.begin(), series.days.end(), t,
        [](const DailySentiment& d, Date date) { return d.date < date; });
    if (it == series.days.end() || it->date != t)
        throw DataError("date " + t.iso() + " not present in sentiment series");
    const auto end_idx = static_cast<std::size_t>(it - series.days.begin());
    if (end_idx + 1 < static_cast<std::size_t>(depth))
        throw DataError("fewer than " + std::to_string(depth) + " entries ending at " + t.iso());

    long pos = 0, neg = 0;
    for (std::size_t k = end_idx + 1 - static_cast<std::size_t>(depth); k <= end_idx; ++k) {
        pos += series.days[k].n_pos;
        neg += series.days[k].n_neg;
    }
    return window_score(pos, neg);
}

CumulativeScoreSeries cumulative_series(const SentimentSeries& series, int depth) {
    if (depth < 1) throw DataError("depth must be >= 1");
    if (series.days.empty()) throw DataError("sentiment series is empty");

    CumulativeScoreSeries out;
    out.depth = depth;
    const std::size_t n = series.days.size();
    if (static_cast<std::size_t>(depth) > n) return out;  // caller warns on empty output

    long pos = 0, neg = 0;
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(depth); ++k) {
        pos += series.days[k].n_pos;
        neg += series.days[k].n_neg;
    }
    out.points.reserve(n - depth + 1);
    for (std::size_t k = depth - 1; k < n; ++k) {
        pos += series.days[k].n_pos;
        neg += series.days[k].n_neg;
        out.points.push_back({series.days[k].date, window_score(pos, neg)});
        const auto drop = k + 1 - static_cast<std::size_t>(depth);
        pos -= series.days[drop].n_pos;
        neg -= series.days[drop].n_neg;
    }
    return out;
}

SentimentSeries load_sentiments_csv(const std::string& path) {
    const auto rows = csv::read_file(path);
    if (rows.empty()) throw DataError("empty sentiments file: " + path);
    const std::vector<std::string> expect = {"date", "n_pos", "n_neg", "n_indecisive"};
    if (rows[0] != expect)
        throw DataError("sentiments CSV must have header date,n_pos,n_neg,n_indecisive: " + path);

    std::vector<DailyCounts> counts;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != 4)
            throw DataError("bad sentiments row " + std::to_string(r + 1) + " in " + path);
        DailyCounts c;
        c.date = Date::parse(rows[r][0]);
        c.n_pos = std::stol(rows[r][1]);
        c.n_neg = std::stol(rows[r][2]);
        c.n_indecisive = std::stol(rows[r][3]);
        counts.push_back(c);
    }
    return make_series(std::move(counts), path, "");
}

void write_sentiments_csv(const SentimentSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    csv::write_row(out, {"date", "n_pos", "n_neg", "n_indecisive"});
    for (const auto& d : series.days)
        csv::write_row(out, {d.date.iso(), std::to_string(d.n_pos), std::to_string(d.n_neg),
                             std::to_string(d.n_indecisive)});
    if (!out) throw IoError("short write: " + path);
}

void write_signal_csv(const CumulativeScoreSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    csv::write_row(out, {"date", "value"});
    for (const auto& p : series.points)
        csv::write_row(out, {p.date.iso(), p.value ? csv::format_double(*p.value) : ""});
    if (!out) throw IoError("short write: " + path);
}

std::string display_score(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

}  // namespace sentlab
