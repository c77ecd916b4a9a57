#include "cascade/log.hpp"

#include <cstdlib>
#include <string_view>

#include <spdlog/sinks/stdout_sinks.h>

namespace cascade {

namespace {

spdlog::level::level_enum level_from_env() {
  const char* env = std::getenv("CASCADE_LOG");
  const std::string_view value = env ? env : "";
  if (value == "debug") return spdlog::level::debug;
  if (value == "info") return spdlog::level::info;
  return spdlog::level::err;
}

}  // namespace

spdlog::logger& log() {
  static const std::shared_ptr<spdlog::logger> logger = [] {
    auto sink = std::make_shared<spdlog::sinks::stderr_sink_mt>();
    auto l = std::make_shared<spdlog::logger>("cascade", sink);
    l->set_level(level_from_env());
    l->set_pattern("[%l] %v");
    return l;
  }();
  return *logger;
}

}  // namespace cascade
