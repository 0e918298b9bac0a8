#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdlat {

// Base of every error raised by the library. Messages are meant for end users
// of the command line tool, so they name the offending input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotALattice : public Error {
 public:
  NotALattice(std::size_t x, std::size_t y, const std::string& what)
      : Error(what), x_(x), y_(y) {}
  std::size_t x() const noexcept { return x_; }
  std::size_t y() const noexcept { return y_; }

 private:
  std::size_t x_;
  std::size_t y_;
};

class CyclicCovers : public Error {
 public:
  using Error::Error;
};

class BottomHasNoLowerCovers : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A geometric predicate landed within the tolerance band of its boundary.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class NotCollinear : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class NotLaminar : public Error {
 public:
  using Error::Error;
};

class MissingBoard : public Error {
 public:
  using Error::Error;
};

class RejectionBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed text input (lattice files, circle files, height CSVs).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdlat
