#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zipfkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input data or a numerically undefined result (empty sets, zero
/// variance, too few points, vocabulary too small for the requested bounds).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration value (generator parameters, bounds, modes).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Corpus could not be decoded or read.
class IngestError : public Error {
 public:
  IngestError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace zipfkit
