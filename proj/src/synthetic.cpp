#include "sentlab/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "sentlab/errors.hpp"
#include "sentlab/llm_backend.hpp"
#include "sentlab/rng.hpp"

namespace sentlab {

namespace {

void validate(const SyntheticSpec& spec) {
    if (spec.days < 2) throw ConfigError("fixture needs at least 2 days");
    if (spec.planted_depth < 1 || spec.planted_period < 1)
        throw ConfigError("planted depth and period must be >= 1");
    if (spec.beta < 0.0 || spec.beta > 0.9)
        throw ConfigError("effect size beta must be in [0, 0.9]");
    if (spec.return_noise < 0.0 || spec.return_noise > 0.01)
        throw ConfigError("return noise must be in [0, 0.01]");
    if (spec.mood_persistence < 0.0 || spec.mood_persistence >= 1.0)
        throw ConfigError("mood persistence must be in [0, 1)");
    if (spec.min_headlines < 1 || spec.max_headlines > 15 ||
        spec.min_headlines > spec.max_headlines)
        throw ConfigError("headline counts must satisfy 1 <= min <= max <= 15");
    if (spec.markets.empty()) throw ConfigError("at least one market required");
    if (static_cast<std::size_t>(spec.planted_period) >= spec.days)
        throw ConfigError("planted period must be shorter than the fixture");
}

std::vector<DailyCounts> generate_counts(const SyntheticSpec& spec,
                                         const std::vector<Date>& dates) {
    Rng rng(spec.seed);
    const double phi = spec.mood_persistence;
    const double eps_sd = spec.mood_sd * std::sqrt(1.0 - phi * phi);

    std::vector<DailyCounts> counts;
    counts.reserve(dates.size());
    double mood = 0.0;
    for (const Date& date : dates) {
        mood = std::clamp(phi * mood + eps_sd * rng.normal(), -0.85, 0.85);
        const long total = rng.uniform_int(spec.min_headlines, spec.max_headlines);
        const long indecisive = rng.binomial(total, spec.indecisive_rate);
        const long pos = rng.binomial(total - indecisive, 0.5 * (1.0 + mood));
        DailyCounts c;
        c.date = date;
        c.n_pos = pos;
        c.n_neg = total - indecisive - pos;
        c.n_indecisive = indecisive;
        counts.push_back(c);
    }
    return counts;
}

// Planted construction: P[t + p*] = P[t] * (1 + beta * S_{d*}(t) + noise), so
// the p*-period forward return at t is exactly the planted signal plus noise.
PriceSeries planted_prices(const SyntheticSpec& spec, const std::vector<Date>& dates,
                           const std::vector<std::optional<double>>& planted_signal,
                           const std::string& market_id, Rng& rng) {
    PriceSeries series;
    series.market_id = market_id;
    series.points.resize(dates.size());
    const std::size_t p = static_cast<std::size_t>(spec.planted_period);
    for (std::size_t i = 0; i < p && i < dates.size(); ++i)
        series.points[i] = {dates[i], 100.0 * (1.0 + 0.01 * rng.normal())};
    for (std::size_t t = 0; t + p < dates.size(); ++t) {
        const double drift = planted_signal[t] ? spec.beta * *planted_signal[t] : 0.0;
        const double factor =
            std::max(1.0 + drift + spec.return_noise * rng.normal(), 1e-4);
        series.points[t + p] = {dates[t + p], series.points[t].close * factor};
    }
    return series;
}

PriceSeries null_prices(const SyntheticSpec& spec, const std::vector<Date>& dates,
                        const std::string& market_id, Rng& rng) {
    PriceSeries series;
    series.market_id = market_id;
    series.points.reserve(dates.size());
    for (const Date& date : dates)
        series.points.push_back({date, 100.0 * std::exp(spec.null_level_sd * rng.normal())});
    return series;
}

const std::vector<std::string>& theme_bank() {
    static const std::vector<std::string> themes = {
        "Equities extend gains as bond yields retreat",
        "Oil slides on demand worries",
        "Central bank signals patience on rate path",
        "Tech shares rally on upbeat earnings",
        "Dollar firms against major peers",
        "Miners drag on weaker metal prices",
        "Inflation print cools more than expected",
        "Banks climb on widening margins",
        "Chip stocks slip after export-rule chatter",
        "Travel names rebound with bookings data",
        "Utilities lag as investors rotate to cyclicals",
        "Gold steadies near recent highs",
        "Retailers warn on softer holiday demand",
        "Freight rates tick up on canal congestion",
        "Housing starts surprise to the upside",
        "Energy majors lift dividends",
        "Autos gain on easing supply constraints",
        "Small caps outperform on risk appetite",
        "Healthcare steady amid defensive bid",
        "Media stocks wobble on ad-spend caution",
    };
    return themes;
}

const std::vector<std::string>& filler_bank() {
    static const std::vector<std::string> sentences = {
        "Trading volumes were close to seasonal averages across the major venues.",
        "Volatility gauges eased through the afternoon session.",
        "Breadth favored advancers by a modest margin at the close.",
        "Futures positioning data showed little change week over week.",
        "Cross-asset desks flagged rotation rather than outright de-risking.",
        "Liquidity thinned into the final hour without notable dislocations.",
        "Macro releases due later in the week kept some investors sidelined.",
        "Earnings revisions continued to drift higher for large caps.",
        "Credit spreads were broadly unchanged on the day.",
        "Commodity curves flattened at the front end.",
    };
    return sentences;
}

std::string synth_document_text(const std::vector<std::string>& headlines, Date date,
                                Rng& rng) {
    std::string text = "Global Markets Wrap, " + date.iso() + ". ";
    for (const auto& h : headlines) {
        text += h;
        text += ". ";
    }
    const auto& bank = filler_bank();
    while (text.size() < kMinTextChars + 50)
        text += bank[static_cast<std::size_t>(rng.uniform_int(0, bank.size() - 1))] + " ";
    if (!text.empty() && text.back() == ' ') text.pop_back();
    return text;
}

struct DocFixture {
    NewsDocument doc;
    LlmExchange headline_exchange;
    LlmExchange label_exchange;
};

DocFixture synth_document(const DailyCounts& counts, const std::string& model_id, Rng& rng) {
    const long total = counts.n_pos + counts.n_neg + counts.n_indecisive;
    const auto& themes = theme_bank();

    std::vector<std::string> headline_texts;
    headline_texts.reserve(total);
    for (long i = 0; i < total; ++i) {
        std::string t = themes[static_cast<std::size_t>(rng.uniform_int(0, themes.size() - 1))];
        t += " (" + counts.date.iso() + "/" + std::to_string(i + 1) + ")";
        headline_texts.push_back(std::move(t));
    }

    std::vector<SentimentLabel> labels;
    labels.insert(labels.end(), counts.n_pos, SentimentLabel::positive);
    labels.insert(labels.end(), counts.n_neg, SentimentLabel::negative);
    labels.insert(labels.end(), counts.n_indecisive, SentimentLabel::indecisive);
    for (std::size_t i = labels.size(); i > 1; --i)
        std::swap(labels[i - 1], labels[static_cast<std::size_t>(rng.uniform_int(0, i - 1))]);

    DocFixture fx;
    fx.doc.date = counts.date;
    fx.doc.text = synth_document_text(headline_texts, counts.date, rng);
    fx.doc.source_id = "synthetic";

    const std::string timestamp = counts.date.iso() + "T00:00:00Z";

    const std::string headline_prompt = build_headline_prompt(fx.doc);
    std::string headline_response;
    std::vector<Headline> headlines;
    for (std::size_t i = 0; i < headline_texts.size(); ++i) {
        headline_response += std::to_string(i + 1) + ". " + headline_texts[i] + "\n";
        headlines.push_back(Headline{static_cast<int>(i + 1), headline_texts[i], counts.date});
    }
    fx.headline_exchange = {exchange_digest(headline_prompt, model_id), headline_prompt,
                            headline_response, model_id, timestamp};

    const std::string label_prompt = build_classification_prompt(headlines);
    std::string label_response;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::string word = to_string(labels[i]);
        word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
        label_response += std::to_string(i + 1) + ". " + word + "\n";
    }
    fx.label_exchange = {exchange_digest(label_prompt, model_id), label_prompt, label_response,
                         model_id, timestamp};
    return fx;
}

}  // namespace

SyntheticFixture generate_synthetic_fixture(const SyntheticSpec& spec) {
    validate(spec);
    const std::vector<Date> dates = business_days(spec.start, spec.days);

    SyntheticFixture fixture;
    const std::vector<DailyCounts> counts = generate_counts(spec, dates);
    fixture.sentiments = make_series(counts, "synthetic:" + std::to_string(spec.seed),
                                     spec.model_id);

    std::vector<std::optional<double>> planted_signal(dates.size());
    if (spec.beta > 0.0) {
        const CumulativeScoreSeries s =
            cumulative_series(fixture.sentiments, spec.planted_depth);
        const std::size_t offset = dates.size() - s.points.size();
        for (std::size_t k = 0; k < s.points.size(); ++k)
            planted_signal[offset + k] = s.points[k].value;
    }

    for (std::size_t m = 0; m < spec.markets.size(); ++m) {
        Rng rng(spec.seed ^ (0x9E3779B97F4A7C15ULL * (m + 1)));
        fixture.prices.push_back(
            spec.beta > 0.0
                ? planted_prices(spec, dates, planted_signal, spec.markets[m], rng)
                : null_prices(spec, dates, spec.markets[m], rng));
    }

    if (spec.text_fixtures) {
        Rng text_rng(spec.seed ^ 0xA5A5A5A5DEADBEEFULL);
        for (const auto& c : counts) {
            DocFixture fx = synth_document(c, spec.model_id, text_rng);
            fixture.corpus.push_back(std::move(fx.doc));
            fixture.exchanges.push_back(std::move(fx.headline_exchange));
            fixture.exchanges.push_back(std::move(fx.label_exchange));
        }
    }
    return fixture;
}

void write_fixture(const SyntheticFixture& fixture, const std::string& dir) {
    if (fixture.corpus.empty())
        throw DataError("fixture was generated without text fixtures; nothing to write");
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    write_corpus_jsonl(fixture.corpus, (fs::path(dir) / "corpus.jsonl").string());

    const std::string cache_path = (fs::path(dir) / "cache.jsonl").string();
    if (fs::exists(cache_path)) fs::remove(cache_path);
    ExchangeCache cache(cache_path);
    for (const auto& e : fixture.exchanges) cache.append(e);

    write_sentiments_csv(fixture.sentiments, (fs::path(dir) / "sentiments.csv").string());
    for (const auto& series : fixture.prices)
        write_prices_csv(series,
                         (fs::path(dir) / ("prices_" + series.market_id + ".csv")).string());
}

}  // namespace sentlab
