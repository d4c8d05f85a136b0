#pragma once

#include <stdexcept>
#include <string>

namespace genrep {

// Error taxonomy shared by the whole library. The CLI maps these onto
// process exit codes (see tools/).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operand shapes do not conform to an operator signature.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// An operation produced NaN/Inf, or was fed non-finite values.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// Training loss became non-finite; carries the step for diagnostics.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& msg, long step)
      : Error(msg + " (step " + std::to_string(step) + ")"), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

// Malformed or unreadable file (tensor files, images, manifests).
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Bad run configuration: unknown key, unparsable value, invalid range.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A required input artifact (backbone file, dataset dir) is missing.
class PrereqError : public Error {
 public:
  explicit PrereqError(const std::string& msg) : Error(msg) {}
};

}  // namespace genrep
