#ifndef ALTRING_ERROR_HPP
#define ALTRING_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace altring {

enum class Errc {
  invalid_argument,
  field_mismatch,
  dimension_mismatch,
  division_by_zero,
  not_prime,
  budget_exceeded,
  unsupported_field,
  not_idempotent,
  trivial_idempotent,
  decomposition_failure,
  certification_failure,
  no_central_solution,
  non_unique_z,
  leibniz_failure,
  condition_violated,
  unknown_name,
  syntax_error,
  semantic_error,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::field_mismatch: return "field-mismatch";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::not_prime: return "not-prime";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::unsupported_field: return "unsupported-field";
    case Errc::not_idempotent: return "not-an-idempotent";
    case Errc::trivial_idempotent: return "trivial-idempotent";
    case Errc::decomposition_failure: return "decomposition-failure";
    case Errc::certification_failure: return "certification-failure";
    case Errc::no_central_solution: return "no-central-solution";
    case Errc::non_unique_z: return "non-unique-z";
    case Errc::leibniz_failure: return "leibniz-failure";
    case Errc::condition_violated: return "condition-violated";
    case Errc::unknown_name: return "unknown-name";
    case Errc::syntax_error: return "syntax-error";
    case Errc::semantic_error: return "semantic-error";
  }
  return "unknown";
}

/// Every failure in the library is reported through this type; `code()`
/// identifies the kind, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failures keep the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace altring

#endif  // ALTRING_ERROR_HPP
