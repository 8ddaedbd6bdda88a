#pragma once

#include <functional>
#include <string>

namespace hedgekit::log {

enum class Level { info, warn };

using Sink = std::function<void(Level, const std::string&)>;

// Replaces the process-wide sink; empty sink restores stderr output.
void set_sink(Sink sink);

void info(const std::string& msg);
void warn(const std::string& msg);

}  // namespace hedgekit::log
