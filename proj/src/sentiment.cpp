#include "hedgekit/sentiment.hpp"

#include <algorithm>
#include <cstdlib>

#include "hedgekit/csv.hpp"
#include "hedgekit/errors.hpp"

namespace hedgekit {

const char* to_string(Source source) {
    switch (source) {
        case Source::news: return "news";
        case Source::social: return "social";
        case Source::financial_report: return "financial_report";
        case Source::survey: return "survey";
        case Source::other: return "other";
    }
    return "other";
}

Source source_from_string(const std::string& label) {
    if (label == "news") return Source::news;
    if (label == "social") return Source::social;
    if (label == "financial_report") return Source::financial_report;
    if (label == "survey") return Source::survey;
    if (label == "other") return Source::other;
    throw DataError("unknown sentiment source label: " + label);
}

void SentimentObservation::validate() const {
    if (!(score >= 0.0 && score <= 1.0)) throw DataError("sentiment score outside [0,1]");
    if (!(weight >= 0.0)) throw DataError("negative observation weight");
    if (day < 0) throw DataError("negative trading-day index");
}

SourceWeights SourceWeights::defaults() {
    SourceWeights w;
    w.weights = {
        {Source::news, 150.0},
        {Source::social, 200.0},
        {Source::financial_report, 120.0},
        {Source::survey, 90.0},
    };
    return w;
}

double SourceWeights::weight_for(Source source) const {
    auto it = weights.find(source);
    return it == weights.end() ? 1.0 : it->second;
}

void SourceWeights::validate() const {
    bool any_positive = false;
    for (const auto& [source, weight] : weights) {
        if (weight < 0.0) throw ConfigError("negative source weight for " + std::string(to_string(source)));
        if (weight > 0.0) any_positive = true;
    }
    if (!any_positive) throw ConfigError("source weights must include at least one positive entry");
}

SentimentIndexPoint aggregate_weighted(const std::vector<SentimentObservation>& observations) {
    if (observations.empty()) throw EmptyInput("aggregate_weighted: no observations");
    double weight_sum = 0.0;
    double weighted_score = 0.0;
    const int day = observations.front().day;
    for (const auto& obs : observations) {
        obs.validate();
        if (obs.day != day) throw DataError("aggregate_weighted: observations span multiple days");
        weight_sum += obs.weight;
        weighted_score += obs.weight * obs.score;
    }
    if (weight_sum <= 0.0) throw ZeroWeightSum("aggregate_weighted: all weights zero");
    return {day, weighted_score / weight_sum, static_cast<int>(observations.size())};
}

SentimentIndexPoint aggregate_mean(const std::vector<SentimentObservation>& observations) {
    if (observations.empty()) throw EmptyInput("aggregate_mean: no observations");
    double sum = 0.0;
    const int day = observations.front().day;
    for (const auto& obs : observations) {
        obs.validate();
        if (obs.day != day) throw DataError("aggregate_mean: observations span multiple days");
        sum += obs.score;
    }
    return {day, sum / static_cast<double>(observations.size()),
            static_cast<int>(observations.size())};
}

std::vector<SentimentIndexPoint> rolling_index(const std::vector<SentimentIndexPoint>& daily_points,
                                               int window) {
    if (daily_points.empty()) throw EmptyInput("rolling_index: empty series");
    if (window < 1) throw DataError("rolling_index: window must be >= 1");
    for (std::size_t i = 1; i < daily_points.size(); ++i) {
        if (daily_points[i].day <= daily_points[i - 1].day)
            throw UnsortedInput("rolling_index: days must be strictly increasing");
    }
    std::vector<SentimentIndexPoint> out;
    out.reserve(daily_points.size());
    double running = 0.0;
    for (std::size_t i = 0; i < daily_points.size(); ++i) {
        running += daily_points[i].value;
        std::size_t span = std::min<std::size_t>(window, i + 1);
        if (i >= static_cast<std::size_t>(window)) running -= daily_points[i - window].value;
        out.push_back({daily_points[i].day, running / static_cast<double>(span),
                       static_cast<int>(span)});
    }
    return out;
}

namespace {

double parse_number(const std::string& text, std::size_t line, const char* what) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw ParseError(std::string("bad ") + what + " value: '" + text + "'", line);
    return value;
}

}  // namespace

std::vector<SentimentObservation> load_observation_csv(const std::string& path,
                                                       const SourceWeights& default_weights) {
    const csv::Table table = csv::read_file(path);
    const bool has_weight = table.header.size() == 4 && table.header[3] == "weight";
    const bool header_ok =
        table.header.size() >= 3 && table.header[0] == "day" && table.header[1] == "source" &&
        table.header[2] == "score" && (table.header.size() == 3 || has_weight);
    if (!header_ok) throw ParseError("expected header day,source,score[,weight] in " + path, 1);

    std::vector<SentimentObservation> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        if (row.fields.size() != table.header.size())
            throw ParseError("wrong field count", row.line);
        SentimentObservation obs;
        const double day = parse_number(row.fields[0], row.line, "day");
        if (day < 0 || day != static_cast<int>(day))
            throw ParseError("day must be a non-negative integer", row.line);
        obs.day = static_cast<int>(day);
        try {
            obs.source = source_from_string(row.fields[1]);
        } catch (const DataError& e) {
            throw ParseError(e.what(), row.line);
        }
        obs.score = parse_number(row.fields[2], row.line, "score");
        if (has_weight && !row.fields[3].empty())
            obs.weight = parse_number(row.fields[3], row.line, "weight");
        else
            obs.weight = default_weights.weight_for(obs.source);
        try {
            obs.validate();
        } catch (const DataError& e) {
            throw ParseError(e.what(), row.line);
        }
        out.push_back(obs);
    }
    return out;
}

void write_observation_csv(const std::string& path,
                           const std::vector<SentimentObservation>& observations) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(observations.size());
    for (const auto& obs : observations) {
        rows.push_back({std::to_string(obs.day), to_string(obs.source),
                        csv::format_double(obs.score), csv::format_double(obs.weight)});
    }
    csv::write_file(path, {"day", "source", "score", "weight"}, rows);
}

}  // namespace hedgekit
