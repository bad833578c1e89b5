#pragma once

#include <stdexcept>
#include <string>

namespace swarm {

/// Two agents (numerically) on top of each other: the repulsion term is singular.
class DegenerateConfigError : public std::runtime_error {
  public:
    explicit DegenerateConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid parameters, config files, or experiment specs.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace swarm
