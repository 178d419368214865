#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace floqsim {

// Exit-code class of an error, used by the CLI.
enum class ErrorKind { config, engine, mismatch };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}
  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& w) : Error(ErrorKind::engine, "DimensionError", w) {}
};

struct NonCommuting : Error {
  NonCommuting(std::size_t i, std::size_t j)
      : Error(ErrorKind::engine, "NonCommuting",
              "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute"),
        first(i), second(j) {}
  std::size_t first, second;
};

struct NonCommutingRound : Error {
  NonCommutingRound(std::size_t i, std::size_t j)
      : Error(ErrorKind::engine, "NonCommutingRound",
              "checks " + std::to_string(i) + " and " + std::to_string(j) + " of one round anticommute"),
        first(i), second(j) {}
  std::size_t first, second;
};

struct UnsupportedSize : Error {
  explicit UnsupportedSize(const std::string& w) : Error(ErrorKind::config, "UnsupportedSize", w) {}
};

struct StructureMismatch : Error {
  explicit StructureMismatch(const std::string& w) : Error(ErrorKind::engine, "StructureMismatch", w) {}
};

struct InvalidSpec : Error {
  explicit InvalidSpec(const std::string& w) : Error(ErrorKind::config, "InvalidSpec", w) {}
};

struct ValidationFailed : Error {
  ValidationFailed(const std::string& w, std::size_t i, std::size_t j)
      : Error(ErrorKind::engine, "ValidationFailed", w), first(i), second(j) {}
  std::size_t first, second;
};

struct UnknownLabel : Error {
  explicit UnknownLabel(const std::string& w) : Error(ErrorKind::config, "UnknownLabel", w) {}
};

struct PeriodicityViolation : Error {
  explicit PeriodicityViolation(const std::string& w)
      : Error(ErrorKind::engine, "PeriodicityViolation", w) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorKind::config, "ConfigError", w) {}
};

}  // namespace floqsim
