#pragma once

#include <stdexcept>
#include <string>

namespace rearrange {

/// Index or arity bookkeeping violated (bad generator index, mismatched sums, ...).
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed operator word or function spec. `position` is a character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Evaluation outside the domain of a base function (pole, missing derivative, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace rearrange
