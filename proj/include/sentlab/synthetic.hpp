#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentlab/calendar.hpp"
#include "sentlab/corpus.hpp"
#include "sentlab/llm.hpp"
#include "sentlab/market.hpp"
#include "sentlab/signal.hpp"

namespace sentlab {

// Self-contained random input set: daily counts with a persistent mood, and
// price series whose planted-period forward returns equal
// beta * S_{d*} + Gaussian noise. With beta == 0 prices are stationary jitter
// around a constant level, so period returns carry no serial structure and
// correlation t-tests stay calibrated under the null.
struct SyntheticSpec {
    uint64_t seed = 42;
    std::size_t days = 3400;
    Date start = Date::from_ymd(2010, 1, 4);
    int planted_depth = 40;   // d*
    int planted_period = 20;  // p*
    double beta = 0.25;       // effect size; 0 = null fixture
    double return_noise = 5e-4;
    double mood_persistence = 0.70;  // AR(1) coefficient of the latent mood
    double mood_sd = 0.25;           // stationary standard deviation
    double indecisive_rate = 0.20;
    int min_headlines = 10;
    int max_headlines = 15;
    double null_level_sd = 0.01;  // log-price jitter for the beta == 0 fixture
    std::vector<std::string> markets = default_markets();
    std::string model_id = "replay-sim";
    bool text_fixtures = true;  // also fabricate corpus documents and a replay cache
};

struct SyntheticFixture {
    SentimentSeries sentiments;
    std::vector<PriceSeries> prices;          // one per market
    std::vector<NewsDocument> corpus;         // empty unless text_fixtures
    std::vector<LlmExchange> exchanges;       // replay cache entries, both prompts per doc
};

SyntheticFixture generate_synthetic_fixture(const SyntheticSpec& spec);

// Writes corpus.jsonl, cache.jsonl, sentiments.csv and prices_<market>.csv.
void write_fixture(const SyntheticFixture& fixture, const std::string& dir);

}  // namespace sentlab
