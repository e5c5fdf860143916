#ifndef TRADEBLOC_PARAMS_HPP
#define TRADEBLOC_PARAMS_HPP

#include <string>

#include "tradebloc/errors.hpp"
#include "tradebloc/numeric.hpp"

namespace tradebloc {

// World primitives of the competing-importers economy: n symmetric countries,
// linear demand with intercept a, and supply slope 1 + lambda for the good a
// country exports (slope 1 for everything else).
template <class Scalar>
struct ModelParams {
  int n = 8;
  Scalar a = Scalar(12);
  Scalar lambda = Scalar(36);
  // Two-country worlds keep the formulas well defined but lose the sequential
  // game's guarantees; require an explicit opt-in.
  bool allow_two_country_world = false;

  static constexpr NumericMode mode = NumericTraits<Scalar>::mode;

  Scalar two_n_plus_lambda() const { return Scalar(2 * n) + lambda; }

  // Scale factor of the closed-form welfare expressions, 2*(2n+lambda)^2.
  // Recomputed on demand so it can never go stale.
  Scalar welfare_scale() const {
    Scalar s = two_n_plus_lambda();
    return Scalar(2) * s * s;
  }

  void validate() const {
    if (n < 2) {
      throw InvalidParamsError("world size must be at least 2, got " + std::to_string(n));
    }
    if (n == 2 && !allow_two_country_world) {
      throw InvalidParamsError(
          "a two-country world needs the explicit override flag; the sequential-game "
          "guarantees assume at least 3 countries");
    }
    if (!(a > Scalar(0))) {
      throw InvalidParamsError("demand intercept a must be positive");
    }
    if (!(lambda > Scalar(0))) {
      throw InvalidParamsError("comparative-advantage degree lambda must be positive");
    }
  }
};

}  // namespace tradebloc

#endif  // TRADEBLOC_PARAMS_HPP
