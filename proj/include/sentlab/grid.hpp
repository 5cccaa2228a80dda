#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sentlab {

// Labeled 2-D layer. Undefined cells are explicit and must never be read as 0.
struct GridLayer {
    std::vector<int> row_labels;  // cumulative-score depths d
    std::vector<int> col_labels;  // return periods p
    std::vector<std::optional<double>> cells;  // row-major

    static GridLayer make(std::vector<int> rows, std::vector<int> cols);

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }
    std::size_t index(std::size_t i, std::size_t j) const { return i * cols() + j; }

    std::optional<double>& at(std::size_t i, std::size_t j) { return cells[index(i, j)]; }
    const std::optional<double>& at(std::size_t i, std::size_t j) const {
        return cells[index(i, j)];
    }

    bool same_shape(const GridLayer& other) const {
        return row_labels == other.row_labels && col_labels == other.col_labels;
    }

    std::size_t defined_count() const;
};

// CSV layout: corner cell empty, columns labeled `<col_prefix><p>`, rows
// labeled `<row_prefix><d>`; undefined cells serialize as empty fields.
void write_grid_csv(const GridLayer& grid, const std::string& path,
                    const std::string& row_prefix = "cum_",
                    const std::string& col_prefix = "ret_");

GridLayer read_grid_csv(const std::string& path, const std::string& row_prefix = "cum_",
                        const std::string& col_prefix = "ret_");

// Inclusive arithmetic grid {start, start+step, ..., <= stop}.
std::vector<int> arithmetic_grid(int start, int stop, int step);

}  // namespace sentlab
