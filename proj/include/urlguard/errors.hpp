#pragma once

#include <stdexcept>
#include <string>

namespace urlguard {

// Error taxonomy mirrors the CLI exit codes: ConfigError/SchemaError -> 2,
// DataError -> 3, TrainError -> 4.

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SchemaError : ConfigError {
  explicit SchemaError(const std::string& msg) : ConfigError(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TrainError : std::runtime_error {
  explicit TrainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace urlguard
