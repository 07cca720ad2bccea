#ifndef GEDANKEN_CONFIG_HPP
#define GEDANKEN_CONFIG_HPP

#include <stdexcept>
#include <string>

#include "gedanken/sweep.hpp"

namespace gedanken::config {

/// Unreadable file, unknown key, bad number, malformed sweep line, violated
/// grid invariant: anything that stops a config from producing a GridSpec.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the flat key-value scenario/grid format (see docs/config_format.md):
/// `key = value` lines, `#` comments, numbers in Planck units with an
/// optional `value@unit` SI escape (m, s, kg, C), and repeatable
/// `sweep = name, lo, hi, points, log|lin` axis lines. The returned grid has
/// no axes for a plain scenario config. Grid invariants are checked here;
/// scenario invariants are left to validate()/classify().
sweep::GridSpec parse_config_text(const std::string& text,
                                  const std::string& origin = "<config>");

/// File variant; unreadable files raise ConfigError.
sweep::GridSpec parse_config_file(const std::string& path);

}  // namespace gedanken::config

#endif  // GEDANKEN_CONFIG_HPP
