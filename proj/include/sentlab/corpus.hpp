#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sentlab/calendar.hpp"

namespace sentlab {

// One accepted market-wrap summary per trading day.
struct NewsDocument {
    Date date;
    std::string text;
    std::string source_id;
};

enum class CorpusFormat { jsonl, csv };

CorpusFormat parse_corpus_format(const std::string& name);

struct IngestReport {
    std::size_t raw = 0;
    std::size_t accepted = 0;
    std::size_t too_short = 0;
    std::size_t no_keyword = 0;
    std::size_t duplicate_date = 0;
    std::size_t malformed = 0;
    std::optional<Date> first_date;
    std::optional<Date> last_date;

    std::string to_json() const;
};

struct CorpusLoadResult {
    std::vector<NewsDocument> documents;  // accepted, ascending by date
    IngestReport report;
    std::vector<std::string> warnings;  // rejected/malformed records, with line numbers
};

// Acceptance filter: raw text >= 600 characters and contains "market wrap" or
// "markets wrap" case-insensitively.
constexpr std::size_t kMinTextChars = 600;
bool passes_filter(const std::string& text, std::string* reason = nullptr);

// Applies the acceptance filter and the first-wins duplicate-date rule to
// documents in input order, then sorts ascending by date.
CorpusLoadResult filter_documents(std::vector<NewsDocument> docs);

CorpusLoadResult load_corpus(const std::string& path, CorpusFormat format);

const IngestReport& filter_stats(const CorpusLoadResult& result);

void write_corpus_jsonl(const std::vector<NewsDocument>& docs, const std::string& path);

}  // namespace sentlab
