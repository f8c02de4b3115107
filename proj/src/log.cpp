#include "chroma/log.hpp"

#include <cstdio>
#include <cstdlib>

namespace chroma::log {

Level level() {
    static const Level lvl = [] {
        const char* env = std::getenv("CHROMA_LOG");
        if (!env) return Level::Warn;
        const std::string v(env);
        if (v == "quiet") return Level::Quiet;
        if (v == "info") return Level::Info;
        if (v == "debug") return Level::Debug;
        return Level::Warn;
    }();
    return lvl;
}

namespace {
void emit(Level at, const char* tag, const std::string& msg) {
    if (level() >= at) std::fprintf(stderr, "%s %s\n", tag, msg.c_str());
}
}  // namespace

void warn(const std::string& msg) { emit(Level::Warn, "warning:", msg); }
void info(const std::string& msg) { emit(Level::Info, "info:", msg); }
void debug(const std::string& msg) { emit(Level::Debug, "debug:", msg); }

}  // namespace chroma::log
