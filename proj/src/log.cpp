#include "hedgekit/log.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace hedgekit::log {

namespace {

std::mutex g_mutex;
Sink g_sink;

void emit(Level level, const std::string& msg) {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (g_sink) {
        g_sink(level, msg);
        return;
    }
    std::cerr << (level == Level::warn ? "[warn] " : "[info] ") << msg << "\n";
}

}  // namespace

void set_sink(Sink sink) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_sink = std::move(sink);
}

void info(const std::string& msg) { emit(Level::info, msg); }
void warn(const std::string& msg) { emit(Level::warn, msg); }

}  // namespace hedgekit::log
