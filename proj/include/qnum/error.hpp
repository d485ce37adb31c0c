#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qnum {

/// Failure categories raised by the library. Every thrown qnum::error carries one.
enum class errc {
  invalid_rational,        // 0/0 and friends
  pole_at_every_point,     // Taylor expansion of the projective point at infinity
  not_a_square,            // series square root does not exist over the coefficient ring
  division_by_zero,
  non_integral,            // exact integer division left a remainder
  not_finite,              // operation undefined at infinity
  invalid_continued_fraction,
  rational_root,           // algebraic-number source turned out to be rational
  not_unimodular,          // det != 1
  not_hyperbolic,
  order_violation,         // diff_poly called with x <= y
  invalid_arguments,
  invalid_snake_input,
  insufficient_terms,
  parse_error,
  internal,                // a runtime self-check failed; always a bug
};

inline std::string_view to_string(errc e) {
  switch (e) {
    case errc::invalid_rational: return "InvalidRational";
    case errc::pole_at_every_point: return "PoleAtEveryPoint";
    case errc::not_a_square: return "NotASquare";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::non_integral: return "NonIntegral";
    case errc::not_finite: return "NotFinite";
    case errc::invalid_continued_fraction: return "InvalidContinuedFraction";
    case errc::rational_root: return "RationalRoot";
    case errc::not_unimodular: return "NotUnimodular";
    case errc::not_hyperbolic: return "NotHyperbolic";
    case errc::order_violation: return "OrderViolation";
    case errc::invalid_arguments: return "InvalidArguments";
    case errc::invalid_snake_input: return "InvalidSnakeInput";
    case errc::insufficient_terms: return "InsufficientTerms";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Raised when a finite input (CF prefix, coefficient list) is too short; `needed` is
/// the smallest length that would have been accepted, when known.
class insufficient_terms : public error {
 public:
  insufficient_terms(std::size_t needed, const std::string& what)
      : error(errc::insufficient_terms, what + " (need " + std::to_string(needed) + ")"),
        needed_(needed) {}

  std::size_t needed() const noexcept { return needed_; }

 private:
  std::size_t needed_;
};

}  // namespace qnum
