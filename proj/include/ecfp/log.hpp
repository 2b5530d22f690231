#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace ecfp {

// Log verbosity is controlled by the ECFP_LOG environment variable:
// "error", "warn" (default), "info", or "debug".
enum class LogLevel : int { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("ECFP_LOG");
    if (env == nullptr) return LogLevel::kWarn;
    if (std::strcmp(env, "error") == 0) return LogLevel::kError;
    if (std::strcmp(env, "info") == 0) return LogLevel::kInfo;
    if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
    return LogLevel::kWarn;
  }();
  return level;
}

inline void log_at(LogLevel level, const char* tag, const std::string& msg) {
  if (static_cast<int>(level) <= static_cast<int>(log_level())) {
    std::fprintf(stderr, "[ecfp %s] %s\n", tag, msg.c_str());
  }
}

inline void log_warn(const std::string& msg) { log_at(LogLevel::kWarn, "warn", msg); }
inline void log_info(const std::string& msg) { log_at(LogLevel::kInfo, "info", msg); }
inline void log_debug(const std::string& msg) { log_at(LogLevel::kDebug, "debug", msg); }

inline void log_warn(const char* tag, const std::string& msg) {
  log_at(LogLevel::kWarn, tag, msg);
}
inline void log_info(const char* tag, const std::string& msg) {
  log_at(LogLevel::kInfo, tag, msg);
}
inline void log_debug(const char* tag, const std::string& msg) {
  log_at(LogLevel::kDebug, tag, msg);
}

}  // namespace ecfp
