#include "hedgekit/provider.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

#include "httplib.h"
#include "json.hpp"

#include "hedgekit/csv.hpp"
#include "hedgekit/errors.hpp"
#include "hedgekit/log.hpp"

namespace hedgekit {

void Lexicon::add(const std::string& token, int sign) {
    auto [it, inserted] = polarity.emplace(token, sign);
    if (!inserted && it->second != sign)
        throw DataError("lexicon token '" + token + "' listed with both polarities");
}

Lexicon Lexicon::builtin() {
    Lexicon lex;
    for (const char* token :
         {"gain", "gains", "growth", "strong", "bullish", "rally", "surge", "profit", "profits",
          "beat", "beats", "upgrade", "outperform", "record", "upside", "rise", "rises", "soar",
          "optimism", "recovery", "boom", "exceed", "exceeds", "robust", "momentum"})
        lex.add(token, +1);
    for (const char* token :
         {"loss", "losses", "decline", "weak", "bearish", "selloff", "crash", "plunge", "miss",
          "misses", "downgrade", "underperform", "risk", "downside", "fall", "falls", "sink",
          "fear", "recession", "slump", "default", "warning", "fraud", "cut", "cuts"})
        lex.add(token, -1);
    return lex;
}

Lexicon Lexicon::from_csv(const std::string& path) {
    const csv::Table table = csv::read_file(path);
    if (table.header != std::vector<std::string>{"token", "polarity"})
        throw ParseError("expected header token,polarity in " + path, 1);
    Lexicon lex;
    for (const auto& row : table.rows) {
        if (row.fields.size() != 2) throw ParseError("wrong field count", row.line);
        std::string token = row.fields[0];
        std::transform(token.begin(), token.end(), token.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        int sign;
        if (row.fields[1] == "pos") sign = +1;
        else if (row.fields[1] == "neg") sign = -1;
        else throw ParseError("polarity must be pos or neg, got '" + row.fields[1] + "'", row.line);
        try {
            lex.add(token, sign);
        } catch (const DataError& e) {
            throw ParseError(e.what(), row.line);
        }
    }
    return lex;
}

double lexicon_score(const std::string& text, const Lexicon& lexicon) {
    if (lexicon.empty()) throw EmptyLexicon("lexicon_score: empty lexicon");
    int positive = 0;
    int negative = 0;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        auto it = lexicon.polarity.find(token);
        if (it != lexicon.polarity.end()) (it->second > 0 ? positive : negative)++;
        token.clear();
    };
    for (unsigned char c : text) {
        if (std::isalnum(c)) token.push_back(static_cast<char>(std::tolower(c)));
        else flush();
    }
    flush();
    const int matched = positive + negative;
    if (matched == 0) return 0.5;
    return 0.5 + 0.5 * static_cast<double>(positive - negative) / static_cast<double>(matched);
}

std::vector<TextBatch> load_text_csv(const std::string& path) {
    const csv::Table table = csv::read_file(path);
    if (table.header != std::vector<std::string>{"day", "source", "text"})
        throw ParseError("expected header day,source,text in " + path, 1);
    std::map<int, TextBatch> by_day;
    for (const auto& row : table.rows) {
        if (row.fields.size() != 3) throw ParseError("wrong field count", row.line);
        char* end = nullptr;
        const double day = std::strtod(row.fields[0].c_str(), &end);
        if (end == row.fields[0].c_str() || *end != '\0' || day < 0 || day != static_cast<int>(day))
            throw ParseError("bad day value: '" + row.fields[0] + "'", row.line);
        Source source;
        try {
            source = source_from_string(row.fields[1]);
        } catch (const DataError& e) {
            throw ParseError(e.what(), row.line);
        }
        TextBatch& batch = by_day[static_cast<int>(day)];
        batch.day = static_cast<int>(day);
        batch.items.push_back({source, row.fields[2]});
    }
    std::vector<TextBatch> out;
    out.reserve(by_day.size());
    for (auto& [day, batch] : by_day) out.push_back(std::move(batch));
    return out;
}

std::vector<double> LexiconScorer::score_texts(const std::vector<std::string>& texts) {
    std::vector<double> out;
    out.reserve(texts.size());
    for (const auto& text : texts) out.push_back(lexicon_score(text, lexicon_));
    return out;
}

std::vector<double> remote_score(const std::vector<std::string>& texts,
                                 const std::string& endpoint, int timeout_ms) {
    if (texts.empty()) throw ProviderError("remote_score: no texts");

    httplib::Client client(endpoint);
    client.set_connection_timeout(0, timeout_ms * 1000);
    client.set_read_timeout(0, timeout_ms * 1000);
    client.set_write_timeout(0, timeout_ms * 1000);

    nlohmann::json body;
    body["texts"] = texts;
    auto res = client.Post("/score", body.dump(), "application/json");
    if (!res) {
        const auto err = res.error();
        if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read ||
            err == httplib::Error::Write)
            throw Timeout("remote scorer timed out after " + std::to_string(timeout_ms) + " ms");
        throw HTTPError(0, "transport failure: " + httplib::to_string(err));
    }
    if (res->status != 200) throw HTTPError(res->status, "scorer endpoint " + endpoint);

    nlohmann::json parsed = nlohmann::json::parse(res->body, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("scores") ||
        !parsed["scores"].is_array())
        throw MalformedResponse("response is not a {\"scores\": [...]} object");
    const auto& scores = parsed["scores"];
    if (scores.size() != texts.size())
        throw MalformedResponse("got " + std::to_string(scores.size()) + " scores for " +
                                std::to_string(texts.size()) + " texts");
    std::vector<double> out;
    out.reserve(scores.size());
    for (const auto& value : scores) {
        if (!value.is_number()) throw MalformedResponse("non-numeric score in response");
        double score = value.get<double>();
        if (score < 0.0 || score > 1.0) {
            log::warn("remote score " + csv::format_double(score) + " outside [0,1]; clamped");
            score = std::clamp(score, 0.0, 1.0);
        }
        out.push_back(score);
    }
    return out;
}

ScoreCache::ScoreCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_, std::ios::binary);
    if (!in) return;  // first run; the file appears on the first store
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.contains("text") || !record.contains("score"))
            throw DataError("corrupt score cache " + path_ + " at line " + std::to_string(line_no));
        entries_[record["text"].get<std::string>()] = record["score"].get<double>();
    }
}

std::optional<double> ScoreCache::lookup(const std::string& text) const {
    auto it = entries_.find(text);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ScoreCache::store(const std::string& text, double score) {
    entries_[text] = score;
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) throw DataError("cannot append to score cache " + path_);
    nlohmann::json record;
    record["text"] = text;
    record["score"] = score;
    out << record.dump() << "\n";
}

RemoteScorer::RemoteScorer(RemoteOptions options, Lexicon fallback_lexicon)
    : options_(std::move(options)), fallback_lexicon_(std::move(fallback_lexicon)) {
    if (options_.endpoint.empty()) throw ConfigError("remote provider requires an endpoint");
    if (options_.cache_path) cache_ = std::make_unique<ScoreCache>(*options_.cache_path);
}

std::vector<double> RemoteScorer::score_texts(const std::vector<std::string>& texts) {
    std::vector<double> out(texts.size(), 0.5);
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (cache_) {
            if (auto hit = cache_->lookup(texts[i])) {
                out[i] = *hit;
                continue;
            }
        }
        missing.push_back(i);
    }
    if (missing.empty()) return out;

    std::vector<std::string> pending;
    pending.reserve(missing.size());
    for (std::size_t i : missing) pending.push_back(texts[i]);

    const int attempts = 1 + std::max(0, options_.retries);
    std::string last_error;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        try {
            const std::vector<double> scores =
                remote_score(pending, options_.endpoint, options_.timeout_ms);
            for (std::size_t k = 0; k < missing.size(); ++k) {
                out[missing[k]] = scores[k];
                if (cache_) cache_->store(pending[k], scores[k]);
            }
            return out;
        } catch (const ProviderError& e) {
            last_error = e.what();
            if (attempt + 1 < attempts)
                log::warn("remote scorer attempt " + std::to_string(attempt + 1) + " failed (" +
                          last_error + "); retrying");
        }
    }
    if (!options_.fallback)
        throw ProviderUnavailable("remote scorer failed after " + std::to_string(attempts) +
                                  " attempts: " + last_error);
    log::warn("remote scorer unavailable (" + last_error + "); falling back to lexicon scores");
    for (std::size_t k = 0; k < missing.size(); ++k)
        out[missing[k]] = lexicon_score(pending[k], fallback_lexicon_);
    return out;  // fallback scores are not cached
}

std::vector<SentimentObservation> score_batch(const TextBatch& batch, Scorer& scorer,
                                              const SourceWeights& weights) {
    if (batch.items.empty()) throw EmptyInput("score_batch: batch has no items");
    std::vector<std::string> texts;
    texts.reserve(batch.items.size());
    for (const auto& item : batch.items) texts.push_back(item.text);
    const std::vector<double> scores = scorer.score_texts(texts);

    std::vector<SentimentObservation> out;
    out.reserve(batch.items.size());
    for (std::size_t i = 0; i < batch.items.size(); ++i) {
        SentimentObservation obs;
        obs.day = batch.day;
        obs.source = batch.items[i].source;
        obs.score = scores[i];
        obs.weight = weights.weight_for(obs.source);
        obs.validate();
        out.push_back(obs);
    }
    return out;
}

}  // namespace hedgekit
