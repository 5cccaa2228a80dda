#include "sentlab/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sentlab/csv.hpp"
#include "sentlab/errors.hpp"

namespace sentlab {

using nlohmann::json;

CorpusFormat parse_corpus_format(const std::string& name) {
    if (name == "jsonl") return CorpusFormat::jsonl;
    if (name == "csv") return CorpusFormat::csv;
    throw ConfigError("unknown corpus format '" + name + "' (expected jsonl or csv)");
}

std::string IngestReport::to_json() const {
    json j;
    j["raw"] = raw;
    j["accepted"] = accepted;
    j["rejected"] = {{"too_short", too_short},
                     {"no_keyword", no_keyword},
                     {"duplicate_date", duplicate_date},
                     {"malformed", malformed}};
    if (first_date && last_date) {
        j["date_range"] = {{"first", first_date->iso()}, {"last", last_date->iso()}};
    } else {
        j["date_range"] = nullptr;
    }
    return j.dump(2) + "\n";
}

bool passes_filter(const std::string& text, std::string* reason) {
    if (text.size() < kMinTextChars) {
        if (reason) *reason = "too_short";
        return false;
    }
    std::string lower;
    lower.reserve(text.size());
    for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower.find("market wrap") == std::string::npos &&
        lower.find("markets wrap") == std::string::npos) {
        if (reason) *reason = "no_keyword";
        return false;
    }
    return true;
}

CorpusLoadResult filter_documents(std::vector<NewsDocument> docs) {
    CorpusLoadResult result;
    result.report.raw = docs.size();
    std::set<int64_t> seen_dates;

    for (auto& doc : docs) {
        std::string reason;
        if (!passes_filter(doc.text, &reason)) {
            if (reason == "too_short")
                ++result.report.too_short;
            else
                ++result.report.no_keyword;
            result.warnings.push_back("rejected " + doc.date.iso() + ": " + reason);
            continue;
        }
        if (!seen_dates.insert(doc.date.serial()).second) {
            ++result.report.duplicate_date;
            result.warnings.push_back("rejected " + doc.date.iso() + ": duplicate_date");
            continue;
        }
        result.documents.push_back(std::move(doc));
    }

    std::stable_sort(result.documents.begin(), result.documents.end(),
                     [](const NewsDocument& a, const NewsDocument& b) { return a.date < b.date; });

    result.report.accepted = result.documents.size();
    if (!result.documents.empty()) {
        result.report.first_date = result.documents.front().date;
        result.report.last_date = result.documents.back().date;
    }
    return result;
}

namespace {

struct RawRecord {
    std::size_t line = 0;
    std::string date;
    std::string text;
    std::string source_id;
};

std::vector<NewsDocument> parse_records(const std::vector<RawRecord>& records,
                                        CorpusLoadResult& result) {
    std::vector<NewsDocument> docs;
    docs.reserve(records.size());
    for (const auto& rec : records) {
        try {
            NewsDocument doc;
            doc.date = Date::parse(rec.date);
            doc.text = rec.text;
            doc.source_id = rec.source_id;
            docs.push_back(std::move(doc));
        } catch (const DataError& e) {
            ++result.report.malformed;
            result.warnings.push_back("line " + std::to_string(rec.line) +
                                      ": malformed record: " + e.what());
        }
    }
    return docs;
}

std::vector<NewsDocument> read_jsonl(const std::string& path, CorpusLoadResult& result) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);

    std::vector<RawRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("date") || !j.contains("text") ||
            !j["date"].is_string() || !j["text"].is_string()) {
            ++result.report.malformed;
            result.warnings.push_back("line " + std::to_string(lineno) +
                                      ": malformed record: not a {date, text} object");
            continue;
        }
        RawRecord rec;
        rec.line = lineno;
        rec.date = j["date"].get<std::string>();
        rec.text = j["text"].get<std::string>();
        if (j.contains("source_id") && j["source_id"].is_string())
            rec.source_id = j["source_id"].get<std::string>();
        records.push_back(std::move(rec));
    }
    return parse_records(records, result);
}

std::vector<NewsDocument> read_csv(const std::string& path, CorpusLoadResult& result) {
    const auto rows = csv::read_file(path);
    if (rows.empty()) return {};

    const auto& header = rows.front();
    auto col = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        return std::nullopt;
    };
    const auto date_col = col("date");
    const auto text_col = col("text");
    const auto source_col = col("source_id");
    if (!date_col || !text_col)
        throw DataError("corpus CSV must have 'date' and 'text' columns: " + path);

    std::vector<RawRecord> records;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() <= std::max(*date_col, *text_col)) {
            ++result.report.malformed;
            result.warnings.push_back("line " + std::to_string(r + 1) +
                                      ": malformed record: too few fields");
            continue;
        }
        RawRecord rec;
        rec.line = r + 1;
        rec.date = row[*date_col];
        rec.text = row[*text_col];
        if (source_col && row.size() > *source_col) rec.source_id = row[*source_col];
        records.push_back(std::move(rec));
    }
    return parse_records(records, result);
}

}  // namespace

CorpusLoadResult load_corpus(const std::string& path, CorpusFormat format) {
    CorpusLoadResult scratch;
    std::vector<NewsDocument> docs = format == CorpusFormat::jsonl ? read_jsonl(path, scratch)
                                                                   : read_csv(path, scratch);
    CorpusLoadResult result = filter_documents(std::move(docs));
    result.report.raw += scratch.report.malformed;
    result.report.malformed = scratch.report.malformed;
    result.warnings.insert(result.warnings.begin(), scratch.warnings.begin(),
                           scratch.warnings.end());
    return result;
}

const IngestReport& filter_stats(const CorpusLoadResult& result) { return result.report; }

void write_corpus_jsonl(const std::vector<NewsDocument>& docs, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    for (const auto& doc : docs) {
        json j;
        j["date"] = doc.date.iso();
        j["text"] = doc.text;
        if (!doc.source_id.empty()) j["source_id"] = doc.source_id;
        out << j.dump() << '\n';
    }
    if (!out) throw IoError("short write: " + path);
}

}  // namespace sentlab
