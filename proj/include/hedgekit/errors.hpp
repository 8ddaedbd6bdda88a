#pragma once

#include <stdexcept>
#include <string>

namespace hedgekit {

// Error categories map to CLI exit codes: config 2, data 3, provider 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProviderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : DataError {
    using DataError::DataError;
};

struct ZeroWeightSum : DataError {
    using DataError::DataError;
};

struct UnsortedInput : DataError {
    using DataError::DataError;
};

struct TooShort : DataError {
    using DataError::DataError;
};

struct ZeroVolatility : DataError {
    using DataError::DataError;
};

struct NonPositiveEquity : DataError {
    using DataError::DataError;
};

struct InsufficientData : DataError {
    using DataError::DataError;
};

struct MisalignedSeries : DataError {
    using DataError::DataError;
};

struct EmptyLexicon : DataError {
    using DataError::DataError;
};

struct InvalidConfig : ConfigError {
    using ConfigError::ConfigError;
};

// Parse-style errors carry the 1-based source line.
struct LineError : DataError {
    LineError(const std::string& what, std::size_t line_no)
        : DataError("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

struct ParseError : LineError {
    using LineError::LineError;
};

struct NonPositivePrice : LineError {
    using LineError::LineError;
};

struct NonMonotoneDays : LineError {
    using LineError::LineError;
};

struct Timeout : ProviderError {
    using ProviderError::ProviderError;
};

struct MalformedResponse : ProviderError {
    using ProviderError::ProviderError;
};

struct HTTPError : ProviderError {
    HTTPError(int status_code, const std::string& what)
        : ProviderError("http status " + std::to_string(status_code) + ": " + what),
          status(status_code) {}
    int status;
};

struct ProviderUnavailable : ProviderError {
    using ProviderError::ProviderError;
};

}  // namespace hedgekit
