#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace romdom {

// Every library error derives from Error so front ends can map them to exit
// codes with a single catch chain.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordering of two symbolic points could not be certified below the maximum
// evaluation precision.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, unsigned max_bits)
      : Error(what), max_bits_(max_bits) {}
  unsigned max_bits() const noexcept { return max_bits_; }

 private:
  unsigned max_bits_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Labeling sets do not partition the circle.
class PartitionViolation : public Error {
 public:
  using Error::Error;
};

// Instance exceeds the exhaustive-search cap.
class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(std::size_t n, std::size_t cap)
      : Error("instance has " + std::to_string(n) +
              " vertices, exhaustive search cap is " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}
  std::size_t vertices() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

// Constructed labeling failed the exact domination check, which indicates a
// bug.
class DominationFailure : public Error {
 public:
  using Error::Error;
};

// Input text did not match its grammar. Line and column are 1-based; column 0
// means the whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(format(line, column, message)),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& message) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace romdom
