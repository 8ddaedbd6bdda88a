#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hedgekit/sentiment.hpp"

namespace hedgekit {

/// Token polarity lookup. A token may not carry both polarities.
struct Lexicon {
    std::unordered_map<std::string, int> polarity;  // +1 positive, -1 negative

    static Lexicon builtin();  // small built-in financial word list
    static Lexicon from_csv(const std::string& path);  // header token,polarity (pos|neg)

    void add(const std::string& token, int sign);
    bool empty() const { return polarity.empty(); }
};

// Tokenizes on non-alphanumeric boundaries, lowercases, counts polar tokens:
// 0.5 + 0.5 * (pos - neg) / (pos + neg), neutral 0.5 when nothing matches.
double lexicon_score(const std::string& text, const Lexicon& lexicon);

struct TextItem {
    Source source = Source::other;
    std::string text;
};

struct TextBatch {
    int day = 0;
    std::vector<TextItem> items;  // non-empty
};

// Texts file: header day,source,text; rows grouped into one batch per day.
std::vector<TextBatch> load_text_csv(const std::string& path);

class Scorer {
public:
    virtual ~Scorer() = default;
    virtual std::vector<double> score_texts(const std::vector<std::string>& texts) = 0;
    virtual std::string name() const = 0;
};

class LexiconScorer : public Scorer {
public:
    explicit LexiconScorer(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}
    std::vector<double> score_texts(const std::vector<std::string>& texts) override;
    std::string name() const override { return "lexicon"; }

private:
    Lexicon lexicon_;
};

// One-shot wire call: POST {endpoint}/score with {"texts": [...]}, expects
// {"scores": [...]} aligned to the inputs. Scores outside [0,1] are clamped
// with a logged warning. Throws Timeout, HTTPError or MalformedResponse.
std::vector<double> remote_score(const std::vector<std::string>& texts,
                                 const std::string& endpoint, int timeout_ms);

// Line-delimited {"text": ..., "score": ...} records keyed by exact text
// bytes; makes repeated backtests reproducible and cheap.
class ScoreCache {
public:
    explicit ScoreCache(std::string path);
    std::optional<double> lookup(const std::string& text) const;
    void store(const std::string& text, double score);
    std::size_t size() const { return entries_.size(); }

private:
    std::string path_;
    std::unordered_map<std::string, double> entries_;
};

struct RemoteOptions {
    std::string endpoint;
    int timeout_ms = 5000;
    int retries = 2;        // attempts = 1 + retries
    bool fallback = true;   // fall back to the lexicon scorer after retries
    std::optional<std::string> cache_path;
};

class RemoteScorer : public Scorer {
public:
    RemoteScorer(RemoteOptions options, Lexicon fallback_lexicon);
    std::vector<double> score_texts(const std::vector<std::string>& texts) override;
    std::string name() const override { return "remote"; }

private:
    RemoteOptions options_;
    Lexicon fallback_lexicon_;
    std::unique_ptr<ScoreCache> cache_;
};

// One observation per batch item, in input order; weights come from the
// source-reliability table.
std::vector<SentimentObservation> score_batch(const TextBatch& batch, Scorer& scorer,
                                              const SourceWeights& weights);

}  // namespace hedgekit
