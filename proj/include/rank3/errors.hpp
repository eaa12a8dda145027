#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rank3 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: corrupt files, graphs of the wrong size,
// mixed coatom counts.
class InputError : public Error {
 public:
  using Error::Error;
};

class Graph6Error : public InputError {
 public:
  enum class Kind { malformed, size_mismatch, class_violation, unsupported_size };

  Graph6Error(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Not enough tabulated values to fit the requested quasipolynomial.
class ArityError : public Error {
 public:
  ArityError(std::size_t required_a_max, std::size_t available_a_max)
      : Error("fit needs values for a = 0.." + std::to_string(required_a_max) +
              " but only a = 0.." + std::to_string(available_a_max) + " are available"),
        required_a_max_(required_a_max),
        available_a_max_(available_a_max) {}

  std::size_t required_a_max() const noexcept { return required_a_max_; }
  std::size_t available_a_max() const noexcept { return available_a_max_; }

 private:
  std::size_t required_a_max_;
  std::size_t available_a_max_;
};

// A fitted quasipolynomial disagrees with a tabulated value at or above its
// threshold. Usually means the period, degree or threshold is wrong.
class FitRejected : public Error {
 public:
  explicit FitRejected(std::size_t index)
      : Error("fitted quasipolynomial disagrees with the table at a = " + std::to_string(index)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// An exact division that was supposed to leave no remainder did.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace rank3
