#include "sentlab/grid.hpp"

#include <fstream>

#include "sentlab/csv.hpp"
#include "sentlab/errors.hpp"

namespace sentlab {

GridLayer GridLayer::make(std::vector<int> rows, std::vector<int> cols) {
    GridLayer g;
    g.row_labels = std::move(rows);
    g.col_labels = std::move(cols);
    g.cells.assign(g.rows() * g.cols(), std::nullopt);
    return g;
}

std::size_t GridLayer::defined_count() const {
    std::size_t n = 0;
    for (const auto& c : cells)
        if (c.has_value()) ++n;
    return n;
}

void write_grid_csv(const GridLayer& grid, const std::string& path,
                    const std::string& row_prefix, const std::string& col_prefix) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);

    std::vector<std::string> header{""};
    for (int p : grid.col_labels) header.push_back(col_prefix + std::to_string(p));
    csv::write_row(out, header);

    for (std::size_t i = 0; i < grid.rows(); ++i) {
        std::vector<std::string> row{row_prefix + std::to_string(grid.row_labels[i])};
        for (std::size_t j = 0; j < grid.cols(); ++j) {
            const auto& c = grid.at(i, j);
            row.push_back(c ? csv::format_double(*c) : "");
        }
        csv::write_row(out, row);
    }
    if (!out) throw IoError("short write: " + path);
}

namespace {

int parse_label(const std::string& field, const std::string& prefix, const std::string& path) {
    if (field.rfind(prefix, 0) != 0)
        throw DataError("bad grid label '" + field + "' in " + path);
    try {
        return std::stoi(field.substr(prefix.size()));
    } catch (const std::exception&) {
        throw DataError("bad grid label '" + field + "' in " + path);
    }
}

}  // namespace

GridLayer read_grid_csv(const std::string& path, const std::string& row_prefix,
                        const std::string& col_prefix) {
    const auto rows = csv::read_file(path);
    if (rows.size() < 2 || rows[0].size() < 2)
        throw DataError("grid CSV too small: " + path);

    GridLayer g;
    for (std::size_t j = 1; j < rows[0].size(); ++j)
        g.col_labels.push_back(parse_label(rows[0][j], col_prefix, path));

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != rows[0].size())
            throw DataError("ragged grid CSV row in " + path);
        g.row_labels.push_back(parse_label(row[0], row_prefix, path));
        for (std::size_t j = 1; j < row.size(); ++j) {
            if (row[j].empty())
                g.cells.push_back(std::nullopt);
            else
                g.cells.push_back(std::stod(row[j]));
        }
    }
    return g;
}

std::vector<int> arithmetic_grid(int start, int stop, int step) {
    if (step <= 0 || start <= 0 || stop < start)
        throw ConfigError("grid spec requires 0 < start <= stop and step > 0");
    std::vector<int> out;
    for (int v = start; v <= stop; v += step) out.push_back(v);
    return out;
}

}  // namespace sentlab
