#pragma once

#include <stdexcept>

namespace cascade {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition on a grid operation (bad position, wrong cell state).
class GridError : public Error {
 public:
  using Error::Error;
};

/// Puzzle generation could not satisfy the requested constraints.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// A constraint violation involves given cells only, so no agent action can
/// repair it. Raised by the coping policy; aborts the episode.
class UnsatisfiablePuzzleError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration input. The message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem read/write failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cascade
