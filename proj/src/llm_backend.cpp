#include "sentlab/llm_backend.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "sentlab/errors.hpp"

namespace sentlab {

using nlohmann::json;

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

ExchangeCache::ExchangeCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_, std::ios::binary);
    if (!in) return;  // first use; created on append
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw DataError("cache line " + std::to_string(lineno) + " is not a JSON object: " +
                            path_);
        LlmExchange e;
        e.prompt_hash = j.value("prompt_hash", "");
        e.prompt_text = j.value("prompt_text", "");
        e.response_text = j.value("response_text", "");
        e.model_id = j.value("model_id", "");
        e.timestamp = j.value("timestamp", "");
        if (e.prompt_hash.empty())
            throw DataError("cache line " + std::to_string(lineno) + " missing prompt_hash: " +
                            path_);
        entries_[e.prompt_hash] = std::move(e);  // newest record wins
    }
}

std::optional<LlmExchange> ExchangeCache::find(const std::string& digest) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(digest);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ExchangeCache::append(const LlmExchange& exchange) {
    std::lock_guard<std::mutex> lock(mu_);
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) throw IoError("cannot append to cache: " + path_);
    json j;
    j["prompt_hash"] = exchange.prompt_hash;
    j["prompt_text"] = exchange.prompt_text;
    j["response_text"] = exchange.response_text;
    j["model_id"] = exchange.model_id;
    j["timestamp"] = exchange.timestamp;
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw IoError("short write to cache: " + path_);
    entries_[exchange.prompt_hash] = exchange;
}

std::size_t ExchangeCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

HttpBackend::Options HttpBackend::from_env() {
    Options o;
    if (const char* url = std::getenv("LLM_API_URL")) o.url = url;
    if (const char* key = std::getenv("LLM_API_KEY")) o.api_key = key;
    if (const char* model = std::getenv("LLM_MODEL")) o.model = model;
    return o;
}

HttpBackend::HttpBackend(Options options) : options_(std::move(options)) {
    if (options_.url.empty())
        throw ConfigError("HTTP backend requires an endpoint URL (LLM_API_URL)");
}

std::string HttpBackend::complete(const std::string& prompt) {
    // Split scheme://host and path.
    const auto scheme_end = options_.url.find("://");
    if (scheme_end == std::string::npos)
        throw ConfigError("backend URL must include scheme: " + options_.url);
    const auto path_start = options_.url.find('/', scheme_end + 3);
    const std::string base =
        path_start == std::string::npos ? options_.url : options_.url.substr(0, path_start);
    const std::string path =
        path_start == std::string::npos ? "/" : options_.url.substr(path_start);

    json body;
    body["model"] = options_.model;
    body["temperature"] = options_.temperature;
    body["messages"] = json::array({{{"role", "user"}, {"content", prompt}}});
    const std::string payload = body.dump();

    httplib::Headers headers;
    if (!options_.api_key.empty())
        headers.emplace("Authorization", "Bearer " + options_.api_key);

    std::string last_error;
    int backoff = options_.retry.backoff_ms;
    for (int attempt = 1; attempt <= options_.retry.attempts; ++attempt) {
        httplib::Client client(base);
        client.set_read_timeout(options_.timeout_s, 0);
        client.set_connection_timeout(options_.timeout_s, 0);
        auto res = client.Post(path, headers, payload, "application/json");
        if (res && res->status == 200) {
            json reply = json::parse(res->body, nullptr, false);
            if (reply.is_discarded() || !reply.contains("choices") || reply["choices"].empty())
                throw BackendError("malformed completion response: " + res->body);
            const auto& choice = reply["choices"][0];
            if (!choice.contains("message") || !choice["message"].contains("content"))
                throw BackendError("completion response missing message content");
            return choice["message"]["content"].get<std::string>();
        }
        last_error = res ? "HTTP status " + std::to_string(res->status)
                         : "transport error: " + httplib::to_string(res.error());
        if (attempt < options_.retry.attempts) {
            std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
            backoff *= 2;
        }
    }
    throw BackendError("backend unreachable after " + std::to_string(options_.retry.attempts) +
                       " attempts: " + last_error);
}

ReplayBackend::ReplayBackend(std::shared_ptr<ExchangeCache> cache, std::string model_id)
    : cache_(std::move(cache)), model_id_(std::move(model_id)) {}

std::string ReplayBackend::complete(const std::string& prompt) {
    const auto hit = cache_->find(exchange_digest(prompt, model_id_));
    if (!hit)
        throw BackendError("replay cache miss (model " + model_id_ + "): " +
                           cache_->path());
    return hit->response_text;
}

CachingBackend::CachingBackend(std::shared_ptr<LlmBackend> inner,
                               std::shared_ptr<ExchangeCache> cache)
    : inner_(std::move(inner)), cache_(std::move(cache)) {}

std::string CachingBackend::complete(const std::string& prompt) {
    const std::string digest = exchange_digest(prompt, inner_->model_id());
    if (const auto hit = cache_->find(digest)) return hit->response_text;
    const std::string response = inner_->complete(prompt);
    cache_->append(LlmExchange{digest, prompt, response, inner_->model_id(), utc_timestamp()});
    return response;
}

namespace {

constexpr std::size_t kMinHeadlines = 10;
constexpr std::size_t kMaxHeadlines = 15;

std::vector<Headline> headlines_step(const NewsDocument& doc, LlmBackend& backend) {
    const std::string prompt = build_headline_prompt(doc);

    auto attempt = [&]() -> std::vector<Headline> {
        return parse_headlines(backend.complete(prompt), doc.date);
    };

    std::vector<Headline> parsed;
    bool retried = false;
    try {
        parsed = attempt();
    } catch (const ParseError&) {
        retried = true;
        parsed = attempt();  // one retry, same prompt
    }
    if (parsed.size() < kMinHeadlines && !retried) parsed = attempt();
    if (parsed.size() < kMinHeadlines)
        throw ParseError("only " + std::to_string(parsed.size()) +
                         " headlines parsed for " + doc.date.iso() + " (need >= " +
                         std::to_string(kMinHeadlines) + ")");
    if (parsed.size() > kMaxHeadlines) parsed.resize(kMaxHeadlines);
    return parsed;
}

}  // namespace

TwoStepResult run_two_step(const NewsDocument& doc, LlmBackend& backend) {
    TwoStepResult result;
    result.headlines = headlines_step(doc, backend);

    const std::string prompt = build_classification_prompt(result.headlines);
    try {
        result.labels = parse_labels(backend.complete(prompt), result.headlines.size());
    } catch (const ParseError&) {
        result.labels = parse_labels(backend.complete(prompt), result.headlines.size());
    }
    return result;
}

std::vector<DailyCounts> score_corpus(const std::vector<NewsDocument>& docs,
                                      LlmBackend& backend, const ScoreOptions& options) {
    std::vector<DailyCounts> out(docs.size());
    std::vector<std::exception_ptr> errors(docs.size());

    const int workers = options.max_in_flight > 0 ? options.max_in_flight : 1;
    std::atomic<std::size_t> next{0};

    // Rate budget: minimum spacing between request starts.
    std::mutex pace_mu;
    auto next_allowed = std::chrono::steady_clock::now();
    const auto interval = options.rate_per_min > 0
                              ? std::chrono::milliseconds(60000 / options.rate_per_min)
                              : std::chrono::milliseconds(0);

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= docs.size()) return;
            if (interval.count() > 0) {
                std::unique_lock<std::mutex> lock(pace_mu);
                const auto now = std::chrono::steady_clock::now();
                const auto wait_until = next_allowed;
                next_allowed = std::max(now, next_allowed) + interval;
                lock.unlock();
                if (wait_until > now) std::this_thread::sleep_until(wait_until);
            }
            try {
                const TwoStepResult r = run_two_step(docs[i], backend);
                DailyCounts c;
                c.date = docs[i].date;
                for (const auto label : r.labels) {
                    if (label == SentimentLabel::positive)
                        ++c.n_pos;
                    else if (label == SentimentLabel::negative)
                        ++c.n_neg;
                    else
                        ++c.n_indecisive;
                }
                out[i] = c;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < docs.size(); ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return out;
}

}  // namespace sentlab
