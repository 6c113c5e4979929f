#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jbc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a_k <= 0, mismatched lengths, non-finite entries.
class InvalidCoefficients : public Error {
 public:
  using Error::Error;
};

// The coefficient window (or response vector) does not reach far enough for
// the requested horizon.
class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(std::size_t k, const std::string& what)
      : Error(what), dimension(k) {}
  std::size_t dimension;  // first failing leading dimension, 1-based
};

// f^n_0 vanished in the Krein recovery.
class DegenerateControl : public Error {
 public:
  DegenerateControl(std::size_t n, const std::string& what)
      : Error(what), horizon(n) {}
  std::size_t horizon;
};

// Data does not correspond to any admissible coefficient set (a recovered
// a_k <= 0, a negative determinant under a square root, ...).
class InvalidData : public Error {
 public:
  InvalidData(std::size_t k, const std::string& what) : Error(what), index(k) {}
  std::size_t index;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace jbc
