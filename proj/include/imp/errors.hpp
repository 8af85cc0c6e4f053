#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imp {

// Invalid codec, endpoint, template or campaign configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input could not be decoded. `offset` is the byte offset of the first
// offending token in the input.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NonInvertibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A codec/description-style pairing the composer cannot render.
class UnsupportedCombinationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& what, bool retryable = true)
      : std::runtime_error(what), retryable_(retryable) {}

  bool retryable() const noexcept { return retryable_; }

 private:
  bool retryable_;
};

class TimeoutError : public TransportError {
 public:
  explicit TimeoutError(const std::string& what) : TransportError(what, true) {}
};

}  // namespace imp
