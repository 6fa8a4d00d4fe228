#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusebench {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed Netpbm input. offset() is the byte position where decoding failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Mismatched or unsupported raster dimensions / band counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Invalid argument value (even window, zero factor, non-finite sample, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Input with no spread where the operation needs one (e.g. mean/std matching
// of a constant band onto a non-constant target).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// A quality metric has no finite value for the given inputs.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace fusebench
