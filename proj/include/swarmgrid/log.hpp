#ifndef SWARMGRID_LOG_HPP
#define SWARMGRID_LOG_HPP

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

namespace swarmgrid::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Level comes from SWARMGRID_LOG (error|warn|info|debug); default warn.
inline Level threshold() {
    static const Level lvl = [] {
        const char* env = std::getenv("SWARMGRID_LOG");
        if (!env) return Level::Warn;
        const std::string s(env);
        if (s == "error") return Level::Error;
        if (s == "info") return Level::Info;
        if (s == "debug") return Level::Debug;
        return Level::Warn;
    }();
    return lvl;
}

inline void write(Level level, const std::string& component, const std::string& message) {
    if (level > threshold()) return;
    static std::mutex mutex;
    static const char* names[] = {"ERROR", "WARN", "INFO", "DEBUG"};
    std::lock_guard<std::mutex> lock(mutex);
    std::cerr << "[" << names[static_cast<int>(level)] << "] " << component << ": " << message
              << "\n";
}

inline void error(const std::string& c, const std::string& m) { write(Level::Error, c, m); }
inline void warn(const std::string& c, const std::string& m) { write(Level::Warn, c, m); }
inline void info(const std::string& c, const std::string& m) { write(Level::Info, c, m); }
inline void debug(const std::string& c, const std::string& m) { write(Level::Debug, c, m); }

} // namespace swarmgrid::log

#endif
