// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpseg {

// Base class for all library errors. Subclasses map onto CLI exit codes:
// ConfigError -> 2, everything else -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user-facing configuration: malformed templates, invalid dimensions,
// unknown strategy tags, out-of-range knobs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Tensor shape / channel mismatches between otherwise valid inputs.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A vector with norm below the degenerate threshold reached a cosine.
class DegenerateVectorError : public Error {
 public:
  using Error::Error;
};

// Container file does not start with the expected magic.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Container manifest disagrees with the payload it describes.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

// Label map contains a class id outside [0, K).
class InvalidLabelError : public Error {
 public:
  using Error::Error;
};

// Training produced a non-finite loss; carries the offending step.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::int64_t step)
      : Error(what), step_(step) {}
  std::int64_t step() const { return step_; }

 private:
  std::int64_t step_;
};

// Synthetic scene generation could not place a shape within the retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// Filesystem trouble, always with path context in the message.
class IoError : public Error {
 public:
  using Error::Error;
};

// A state that the library's own invariants should have made impossible.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dpseg
