#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "harborlink/scenario.hpp"

namespace harborlink::io {

/// Configuration problem with the offending line attached (line 0 means
/// the file as a whole).
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Parses the flat `key = value` format ('#' comments, dotted section
/// prefixes). Omitted keys keep their defaults; unknown keys and
/// malformed or out-of-range values raise ConfigError with the line
/// number. Slot and ship counts default per scenario kind (single: 1
/// ship, 10 slots; multi: 20 ships, 20 slots) unless given explicitly.
scenario::ScenarioConfig parse_config_text(const std::string& text);

/// parse_config_text over the contents of `path`; missing files raise
/// ConfigError naming the path.
scenario::ScenarioConfig parse_config(const std::filesystem::path& path);

} // namespace harborlink::io
