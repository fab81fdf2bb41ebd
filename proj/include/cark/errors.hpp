#ifndef CARK_ERRORS_HPP
#define CARK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cark {

/// Input is well-formed but outside the domain of the operation
/// (square discriminant, non-hyperbolic matrix, imprimitive form, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed text input (form, matrix, word or necklace strings).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cark

#endif
