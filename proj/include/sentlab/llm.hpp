#pragma once

#include <string>
#include <vector>

#include "sentlab/calendar.hpp"
#include "sentlab/corpus.hpp"

namespace sentlab {

struct Headline {
    int index = 0;  // 1..15, unique within a document's set
    std::string text;
    Date source_date;
};

enum class SentimentLabel { positive, negative, indecisive };

const char* to_string(SentimentLabel label);

// One request/response pair in the replay cache.
struct LlmExchange {
    std::string prompt_hash;  // sha256 of prompt text + model id
    std::string prompt_text;
    std::string response_text;
    std::string model_id;
    std::string timestamp;  // informational only
};

std::string exchange_digest(const std::string& prompt_text, const std::string& model_id);

// Step 1: summarize the day's text into numbered headlines.
std::string build_headline_prompt(const NewsDocument& doc);

// Step 2: classify each numbered headline as positive/negative/indecisive.
std::string build_classification_prompt(const std::vector<Headline>& headlines);

// Extracts "<k>. <text>" lines; surrounding prose is ignored.
std::vector<Headline> parse_headlines(const std::string& response, Date source_date);

// One label per numbered statement, case- and punctuation-tolerant.
std::vector<SentimentLabel> parse_labels(const std::string& response, std::size_t expected_count);

}  // namespace sentlab
