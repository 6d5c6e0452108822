#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidrev {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(rho)") {}
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown by inversion; carries the rank that elimination actually found.
class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix(std::size_t size, std::size_t rank)
      : std::domain_error("singular " + std::to_string(size) + "x" + std::to_string(size) +
                          " matrix (rank " + std::to_string(rank) + ")"),
        size_(size),
        rank_(rank) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t size_;
  std::size_t rank_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  explicit ParseError(const std::string& what)
      : std::invalid_argument(what), position_(std::string::npos) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InconsistentRep : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SamplingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace braidrev
