#pragma once

#include <map>
#include <string>
#include <vector>

namespace hedgekit {

enum class Source { news, social, financial_report, survey, other };

const char* to_string(Source source);
Source source_from_string(const std::string& label);  // throws DataError on unknown labels

/// One scored text, reduced to the numbers the engine needs.
struct SentimentObservation {
    double score = 0.5;            // [0,1]; 0 maximally bearish, 1 maximally bullish
    double weight = 1.0;           // source reliability, >= 0
    Source source = Source::other;
    int day = 0;                   // trading-day index, >= 0

    void validate() const;
};

/// Aggregated market sentiment at one time step.
struct SentimentIndexPoint {
    int day = 0;
    double value = 0.5;
    int n_observations = 1;
};

struct SourceWeights {
    std::map<Source, double> weights;

    static SourceWeights defaults();
    // Unlisted sources fall back to weight 1.
    double weight_for(Source source) const;
    void validate() const;

    bool operator==(const SourceWeights&) const = default;
};

SentimentIndexPoint aggregate_weighted(const std::vector<SentimentObservation>& observations);
SentimentIndexPoint aggregate_mean(const std::vector<SentimentObservation>& observations);

// Trailing mean over `window` points with an expanding start, so short series
// keep their full length. Input must be strictly increasing by day.
std::vector<SentimentIndexPoint> rolling_index(const std::vector<SentimentIndexPoint>& daily_points,
                                               int window);

// Observation file: header day,source,score[,weight]; missing weights come
// from the SourceWeights defaults.
std::vector<SentimentObservation> load_observation_csv(const std::string& path,
                                                       const SourceWeights& default_weights);
void write_observation_csv(const std::string& path,
                           const std::vector<SentimentObservation>& observations);

}  // namespace hedgekit
