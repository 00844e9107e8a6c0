#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shbin {

/// Raised when an input probability is missing, non-finite or outside [0, 1].
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class invalid_probability : public invalid_input {
 public:
  invalid_probability(std::size_t index, double value)
      : invalid_input("probability at index " + std::to_string(index) + " is not in [0, 1]: " +
                      std::to_string(value)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The ensemble carries too little randomness for the requested fit (zero variance, p* = 0).
class degenerate_ensemble : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A fit was computed but its rounded parameters leave the admissible range.
class fit_out_of_range : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace shbin
