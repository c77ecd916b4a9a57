#pragma once

#include <memory>

#include <spdlog/spdlog.h>

namespace cascade {

/// Library logger. Writes to stderr only; the level comes from CASCADE_LOG
/// (error, info or debug; default error).
spdlog::logger& log();

}  // namespace cascade
