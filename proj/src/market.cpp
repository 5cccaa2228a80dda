#include "sentlab/market.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "sentlab/csv.hpp"
#include "sentlab/errors.hpp"
#include "sentlab/parallel.hpp"

namespace sentlab {

AlignmentMode parse_alignment_mode(const std::string& name) {
    if (name == "paper_stamp") return AlignmentMode::paper_stamp;
    if (name == "forward") return AlignmentMode::forward;
    throw ConfigError("unknown alignment mode '" + name + "' (expected paper_stamp or forward)");
}

const char* to_string(AlignmentMode mode) {
    return mode == AlignmentMode::paper_stamp ? "paper_stamp" : "forward";
}

PriceSeries load_prices(const std::string& path, std::string market_id,
                        std::vector<std::string>* warnings) {
    const auto rows = csv::read_file(path);
    if (rows.empty()) throw DataError("empty price file: " + path);
    if (rows[0].size() < 2 || rows[0][0] != "date" || rows[0][1] != "close")
        throw DataError("price CSV must have header date,close: " + path);

    PriceSeries series;
    series.market_id = std::move(market_id);
    std::set<int64_t> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const std::string where = path + " row " + std::to_string(r + 1);
        if (rows[r].size() < 2) throw DataError("too few fields: " + where);
        PricePoint p;
        try {
            p.date = Date::parse(rows[r][0]);
        } catch (const DataError& e) {
            throw DataError(std::string(e.what()) + ": " + where);
        }
        try {
            p.close = std::stod(rows[r][1]);
        } catch (const std::exception&) {
            throw DataError("unparseable price: " + where);
        }
        if (!(p.close > 0.0)) throw DataError("non-positive price: " + where);
        if (!seen.insert(p.date.serial()).second)
            throw DataError("duplicate date " + p.date.iso() + ": " + where);
        series.points.push_back(p);
    }

    if (!std::is_sorted(series.points.begin(), series.points.end(),
                        [](const PricePoint& a, const PricePoint& b) { return a.date < b.date; })) {
        std::sort(series.points.begin(), series.points.end(),
                  [](const PricePoint& a, const PricePoint& b) { return a.date < b.date; });
        if (warnings) warnings->push_back("unsorted price rows in " + path + "; sorted by date");
    }
    return series;
}

ReturnSeries returns(const PriceSeries& series, int period, AlignmentMode mode) {
    if (period < 1) throw DataError("return period must be >= 1");
    const auto& pts = series.points;
    if (pts.size() <= static_cast<std::size_t>(period))
        throw DataError("price series for " + series.market_id + " has " +
                        std::to_string(pts.size()) + " points; period " +
                        std::to_string(period) + " requires more");

    ReturnSeries out;
    out.period = period;
    const std::size_t p = static_cast<std::size_t>(period);

    if (mode == AlignmentMode::paper_stamp) {
        out.points.reserve(pts.size() - p);
        for (std::size_t i = p; i < pts.size(); ++i) {
            ReturnPoint r;
            r.value = (pts[i].close - pts[i - p].close) / pts[i - p].close;
            // Stamped the trading day after t; beyond the observed series the
            // next weekday stands in for the unknown next trading day.
            r.stamp = i + 1 < pts.size() ? pts[i + 1].date : pts[i].date.next_weekday();
            r.latest_input_date = pts[i].date;
            out.points.push_back(r);
        }
    } else {
        out.points.reserve(pts.size() - p);
        for (std::size_t i = 0; i + p < pts.size(); ++i) {
            ReturnPoint r;
            r.value = (pts[i + p].close - pts[i].close) / pts[i].close;
            r.stamp = pts[i].date;
            r.latest_input_date = pts[i + p].date;
            out.points.push_back(r);
        }
    }
    return out;
}

ReturnGrid build_return_grid(const PriceSeries& series, const std::vector<int>& periods,
                             AlignmentMode mode, int threads) {
    if (periods.empty()) throw DataError("period grid must be non-empty");
    for (std::size_t i = 1; i < periods.size(); ++i)
        if (periods[i] <= periods[i - 1])
            throw DataError("period grid must be strictly increasing");

    ReturnGrid grid;
    grid.market_id = series.market_id;
    grid.mode = mode;
    grid.columns.resize(periods.size());
    parallel_for(periods.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j)
            grid.columns[j] = returns(series, periods[j], mode);
    });
    return grid;
}

void write_return_grid_csv(const ReturnGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);

    std::vector<std::string> header{"date"};
    std::map<int64_t, std::vector<std::string>> rows;  // stamp -> cells
    for (std::size_t j = 0; j < grid.columns.size(); ++j) {
        header.push_back("ret_p" + std::to_string(grid.columns[j].period));
        for (const auto& pt : grid.columns[j].points) {
            auto& row = rows[pt.stamp.serial()];
            row.resize(grid.columns.size());
            row[j] = csv::format_double(pt.value);
        }
    }
    csv::write_row(out, header);
    for (auto& [serial, cells] : rows) {
        cells.resize(grid.columns.size());
        std::vector<std::string> fields{Date::from_serial(serial).iso()};
        fields.insert(fields.end(), cells.begin(), cells.end());
        csv::write_row(out, fields);
    }
    if (!out) throw IoError("short write: " + path);
}

ReturnGrid read_return_grid_csv(const std::string& path, std::string market_id,
                                AlignmentMode mode) {
    const auto rows = csv::read_file(path);
    if (rows.empty() || rows[0].empty() || rows[0][0] != "date")
        throw DataError("return grid CSV must start with a date column: " + path);

    ReturnGrid grid;
    grid.market_id = std::move(market_id);
    grid.mode = mode;
    for (std::size_t j = 1; j < rows[0].size(); ++j) {
        const std::string& label = rows[0][j];
        if (label.rfind("ret_p", 0) != 0)
            throw DataError("bad return column label '" + label + "' in " + path);
        ReturnSeries col;
        col.period = std::stoi(label.substr(5));
        grid.columns.push_back(std::move(col));
    }
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw DataError("ragged return grid row in " + path);
        const Date stamp = Date::parse(rows[r][0]);
        for (std::size_t j = 1; j < rows[r].size(); ++j) {
            if (rows[r][j].empty()) continue;
            ReturnPoint pt;
            pt.stamp = stamp;
            pt.value = std::stod(rows[r][j]);
            pt.latest_input_date = stamp;  // original input dates are not persisted
            grid.columns[j - 1].points.push_back(pt);
        }
    }
    return grid;
}

void write_prices_csv(const PriceSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    csv::write_row(out, {"date", "close"});
    for (const auto& p : series.points)
        csv::write_row(out, {p.date.iso(), csv::format_double(p.close)});
    if (!out) throw IoError("short write: " + path);
}

}  // namespace sentlab
