#include "sentlab/llm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "sentlab/errors.hpp"
#include "sentlab/sha256.hpp"

namespace sentlab {

namespace {

constexpr const char* kHeadlinePromptTemplate =
    "Assume you are an experienced asset manager. Analyze the text between {} and identify "
    "the predominant themes. For each theme, formulate a compelling headline that "
    "encapsulates its core message. Please arrange your responses in a list format, "
    "ensuring a line break after each headline.\n"
    "Your list should contain a total of 15 distinct headlines reflecting the respective "
    "themes and presented in the following format:\n"
    " 1. Headline that encapsulates Theme 1\n"
    " 2. Headline that encapsulates Theme 2\n"
    "...\n"
    "15. Headline that encapsulates Theme 15\n";

constexpr const char* kClassificationPromptTemplate =
    "Assume you are an experienced asset manager. Your task is to assess the impact of "
    "various economic events and trends on global equities. For each numbered statement "
    "provided below between{}, classify its impact as either \"positive,\" \"negative,\" "
    "or \"indecisive\".\n";

}  // namespace

const char* to_string(SentimentLabel label) {
    switch (label) {
        case SentimentLabel::positive: return "positive";
        case SentimentLabel::negative: return "negative";
        case SentimentLabel::indecisive: return "indecisive";
    }
    return "?";
}

std::string exchange_digest(const std::string& prompt_text, const std::string& model_id) {
    return sha256_hex(prompt_text + model_id);
}

std::string build_headline_prompt(const NewsDocument& doc) {
    if (doc.text.empty())
        throw DataError("document has empty text; corpus filter should have rejected it");
    std::string prompt = kHeadlinePromptTemplate;
    prompt += '{';
    prompt += doc.text;
    prompt += '}';
    return prompt;
}

std::string build_classification_prompt(const std::vector<Headline>& headlines) {
    if (headlines.empty()) throw DataError("classification prompt requires at least one headline");
    if (headlines.size() > 15)
        throw DataError("classification prompt accepts at most 15 headlines");
    std::string prompt = kClassificationPromptTemplate;
    prompt += '{';
    for (std::size_t i = 0; i < headlines.size(); ++i) {
        prompt += std::to_string(i + 1);
        prompt += ". ";
        prompt += headlines[i].text;
        prompt += '\n';
    }
    prompt += '}';
    return prompt;
}

namespace {

// Matches "<k>. <text>" or "<k>) <text>" with optional leading whitespace.
bool match_numbered_line(const std::string& line, int& index, std::string& rest) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == start || i - start > 3) return false;
    if (i >= line.size() || (line[i] != '.' && line[i] != ')')) return false;
    index = std::stoi(line.substr(start, i - start));
    ++i;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    rest = line.substr(i);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.pop_back();
    return true;
}

std::string normalize_label_token(const std::string& text) {
    std::string out;
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (std::isalpha(u)) {
            out += static_cast<char>(std::tolower(u));
        } else if (std::isspace(u)) {
            if (!out.empty() && out.back() != ' ') out += ' ';
        }
        // punctuation and quotes around the label are dropped
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

}  // namespace

std::vector<Headline> parse_headlines(const std::string& response, Date source_date) {
    std::vector<Headline> out;
    std::map<int, bool> seen;
    std::istringstream lines(response);
    std::string line;
    while (std::getline(lines, line)) {
        int index = 0;
        std::string text;
        if (!match_numbered_line(line, index, text) || text.empty()) continue;
        if (seen[index])
            throw ParseError("duplicate headline index " + std::to_string(index), response);
        seen[index] = true;
        out.push_back(Headline{index, text, source_date});
    }
    if (out.empty()) throw ParseError("no numbered headlines found in response", response);
    return out;
}

std::vector<SentimentLabel> parse_labels(const std::string& response,
                                         std::size_t expected_count) {
    if (expected_count < 1) throw DataError("expected_count must be >= 1");

    std::map<int, SentimentLabel> by_index;
    std::istringstream lines(response);
    std::string line;
    while (std::getline(lines, line)) {
        int index = 0;
        std::string text;
        if (!match_numbered_line(line, index, text)) continue;
        const std::string token = normalize_label_token(text);
        SentimentLabel label;
        if (token == "positive")
            label = SentimentLabel::positive;
        else if (token == "negative")
            label = SentimentLabel::negative;
        else if (token == "indecisive")
            label = SentimentLabel::indecisive;
        else
            throw ParseError("unrecognized label '" + text + "' for statement " +
                                 std::to_string(index),
                             response);
        by_index[index] = label;
    }

    std::vector<SentimentLabel> out;
    out.reserve(expected_count);
    for (std::size_t k = 1; k <= expected_count; ++k) {
        auto it = by_index.find(static_cast<int>(k));
        if (it == by_index.end())
            throw ParseError("missing label for statement " + std::to_string(k), response);
        out.push_back(it->second);
    }
    return out;
}

}  // namespace sentlab
