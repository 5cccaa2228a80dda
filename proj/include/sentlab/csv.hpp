#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sentlab::csv {

// RFC 4180 rows; quoted fields may contain commas, quotes and newlines.
std::vector<std::vector<std::string>> parse(const std::string& text);
std::vector<std::vector<std::string>> read_file(const std::string& path);

std::string escape(const std::string& field);
void write_row(std::ostream& os, const std::vector<std::string>& fields);

// Shortest round-trip decimal representation; stable across runs.
std::string format_double(double v);

}  // namespace sentlab::csv
