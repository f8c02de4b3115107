#pragma once

#include <string>

namespace chroma::log {

// CHROMA_LOG = quiet | warn | info | debug (default warn). Diagnostics go
// to stderr; stdout stays machine-readable.
enum class Level { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

Level level();
void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace chroma::log
