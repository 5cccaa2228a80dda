#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sentlab/llm.hpp"

namespace sentlab {

class LlmBackend {
public:
    virtual ~LlmBackend() = default;
    virtual std::string complete(const std::string& prompt) = 0;
    virtual std::string model_id() const = 0;
};

struct RetryPolicy {
    int attempts = 3;      // transport attempts
    int backoff_ms = 250;  // doubled after each failure
};

// Append-only JSON-lines store of LlmExchange records, keyed by digest.
// Appends are serialized and flushed; lookups return the newest record.
class ExchangeCache {
public:
    // Creates the file on first append if missing.
    explicit ExchangeCache(std::string path);

    std::optional<LlmExchange> find(const std::string& digest) const;
    void append(const LlmExchange& exchange);
    std::size_t size() const;
    const std::string& path() const { return path_; }

private:
    std::string path_;
    mutable std::mutex mu_;
    std::unordered_map<std::string, LlmExchange> entries_;
};

// OpenAI-style chat-completions client with retry/backoff on transport errors.
class HttpBackend : public LlmBackend {
public:
    struct Options {
        std::string url;   // e.g. https://api.openai.com/v1/chat/completions
        std::string api_key;
        std::string model = "gpt-4.0";
        double temperature = 0.0;
        int timeout_s = 120;
        RetryPolicy retry;
    };

    // Reads LLM_API_URL, LLM_API_KEY, LLM_MODEL.
    static Options from_env();

    explicit HttpBackend(Options options);
    std::string complete(const std::string& prompt) override;
    std::string model_id() const override { return options_.model; }

private:
    Options options_;
};

// Cache-only backend: replays persisted exchanges, fails on a miss.
class ReplayBackend : public LlmBackend {
public:
    ReplayBackend(std::shared_ptr<ExchangeCache> cache, std::string model_id);
    std::string complete(const std::string& prompt) override;
    std::string model_id() const override { return model_id_; }

private:
    std::shared_ptr<ExchangeCache> cache_;
    std::string model_id_;
};

// Serves from the cache when possible; otherwise calls the inner backend and
// records the exchange before returning.
class CachingBackend : public LlmBackend {
public:
    CachingBackend(std::shared_ptr<LlmBackend> inner, std::shared_ptr<ExchangeCache> cache);
    std::string complete(const std::string& prompt) override;
    std::string model_id() const override { return inner_->model_id(); }

private:
    std::shared_ptr<LlmBackend> inner_;
    std::shared_ptr<ExchangeCache> cache_;
};

// Test/synthetic backend delegating to a function.
class CallbackBackend : public LlmBackend {
public:
    CallbackBackend(std::function<std::string(const std::string&)> fn, std::string model_id)
        : fn_(std::move(fn)), model_id_(std::move(model_id)) {}
    std::string complete(const std::string& prompt) override { return fn_(prompt); }
    std::string model_id() const override { return model_id_; }

private:
    std::function<std::string(const std::string&)> fn_;
    std::string model_id_;
};

struct TwoStepResult {
    std::vector<Headline> headlines;
    std::vector<SentimentLabel> labels;  // aligned with headlines by position
};

// Headline extraction then per-headline classification. Accepts 10..15 parsed
// headlines (more are truncated to 15); below 10 the prompt is retried once.
TwoStepResult run_two_step(const NewsDocument& doc, LlmBackend& backend);

struct ScoreOptions {
    int max_in_flight = 4;
    int rate_per_min = 0;  // 0 = unlimited
};

struct DailyCounts {
    Date date;
    long n_pos = 0;
    long n_neg = 0;
    long n_indecisive = 0;
};

// Runs the two-step pipeline over every document; backend calls for distinct
// documents may run concurrently, results are emitted in date order.
std::vector<DailyCounts> score_corpus(const std::vector<NewsDocument>& docs,
                                      LlmBackend& backend, const ScoreOptions& options = {});

}  // namespace sentlab
