#ifndef TRADEBLOC_SIGFIG_HPP
#define TRADEBLOC_SIGFIG_HPP

#include <string>

#include "tradebloc/numeric.hpp"

namespace tradebloc {

// Rounds to the given number of significant figures with round-half-even and
// renders like printf %g: fixed notation for moderate exponents, scientific
// otherwise, trailing zeros trimmed. Rounding happens exactly in rational
// arithmetic for both backends, so presentation never depends on the numeric
// mode.
std::string format_sigfigs(const Rational& value, int sigfigs);
std::string format_sigfigs(double value, int sigfigs);

template <class Scalar>
std::string format_scalar(const Scalar& value, int sigfigs) {
  return format_sigfigs(value, sigfigs);
}

// Exact decimal scientific parse: "12", "0.5", "1/2", "-3.25e2".
Rational parse_rational(const std::string& text);

template <class Scalar>
Scalar parse_scalar(const std::string& text) {
  Rational q = parse_rational(text);
  if constexpr (NumericTraits<Scalar>::mode == NumericMode::kExactRational) {
    return q;
  } else {
    return to_double(q);
  }
}

}  // namespace tradebloc

#endif  // TRADEBLOC_SIGFIG_HPP
