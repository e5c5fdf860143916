#ifndef TRADEBLOC_TARIFF_GAME_HPP
#define TRADEBLOC_TARIFF_GAME_HPP

#include <string>

#include "tradebloc/economy.hpp"
#include "tradebloc/errors.hpp"
#include "tradebloc/numeric.hpp"
#include "tradebloc/params.hpp"
#include "tradebloc/tariff_profile.hpp"

// Nash equilibrium and world-optimum analysis of the simultaneous tariff game.

namespace tradebloc {

template <class Scalar>
struct NashSolution {
  Scalar tariff;  // common equilibrium tariff on every import
  TariffProfile<Scalar> profile;
  Scalar per_country_welfare;
  int iterations = 0;  // 0 for the closed form
};

// Country i's optimal tariff on good j given everyone else's tariffs on j:
// (a lambda + 4 sum_{k != i,j} t_kj) / ((2n+lambda)^2 - 4). Increasing in the
// others' tariffs, so tariffs are strategic complements.
template <class Scalar>
Scalar best_response(const ModelParams<Scalar>& params, const TariffProfile<Scalar>& tariffs,
                     int i, int j) {
  if (i == j) throw IndexError("a country has no best response against itself");
  if (i < 0 || j < 0 || i >= params.n || j >= params.n) {
    throw IndexError("country index out of range");
  }
  Scalar rest(0);
  for (int k = 0; k < params.n; ++k)
    if (k != i && k != j) rest += tariffs.at(k, j);
  Scalar s = params.two_n_plus_lambda();
  return (params.a * params.lambda + Scalar(4) * rest) / (s * s - Scalar(4));
}

template <class Scalar>
Scalar nash_tariff(const ModelParams<Scalar>& params) {
  const int n = params.n;
  const Scalar lam = params.lambda;
  return params.a * lam /
         (lam * lam + Scalar(4 * n) * lam + Scalar(4) * Scalar(n * n - n + 1));
}

template <class Scalar>
NashSolution<Scalar> nash_closed_form(const ModelParams<Scalar>& params) {
  params.validate();
  NashSolution<Scalar> out;
  out.tariff = nash_tariff(params);
  out.profile = TariffProfile<Scalar>::common(params.n, out.tariff);
  out.per_country_welfare = welfare(params, out.profile).total[0];
  out.iterations = 0;
  return out;
}

// Synchronous best-response iteration; the independent oracle for the closed
// form. All coordinates update simultaneously so the result cannot depend on
// a sweep order.
template <class Scalar>
NashSolution<Scalar> nash_by_iteration(const ModelParams<Scalar>& params,
                                       const TariffProfile<Scalar>& initial,
                                       const Scalar& tolerance, int max_iterations) {
  params.validate();
  if (!(tolerance > Scalar(0))) throw InvalidParamsError("tolerance must be positive");
  const int n = params.n;
  TariffProfile<Scalar> current = initial;
  for (int iteration = 1; iteration <= max_iterations; ++iteration) {
    TariffProfile<Scalar> next(n);
    Scalar step(0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        next.at(i, j) = best_response(params, current, i, j);
        Scalar d = abs_value(Scalar(next.at(i, j) - current.at(i, j)));
        if (d > step) step = d;
      }
    }
    current = next;
    if (step < tolerance) {
      NashSolution<Scalar> out;
      out.tariff = current.at(0, 1);
      out.profile = current;
      out.per_country_welfare = welfare(params, current).total[0];
      out.iterations = iteration;
      return out;
    }
  }
  throw NoConvergenceError("best-response iteration did not converge in " +
                           std::to_string(max_iterations) + " sweeps");
}

template <class Scalar>
NashSolution<Scalar> nash_by_iteration(const ModelParams<Scalar>& params) {
  return nash_by_iteration(params, TariffProfile<Scalar>::zeros(params.n),
                           NumericTraits<Scalar>::default_tolerance(), 10000);
}

// Residuals of the world-welfare first-order condition,
// t_ij - (2/(2n+lambda)) sum_{k != j} t_kj. The all-zero profile is the unique
// root, so global free trade is the unique world optimum.
template <class Scalar>
SquareMatrix<Scalar> world_optimum_check(const ModelParams<Scalar>& params,
                                         const TariffProfile<Scalar>& tariffs) {
  params.validate();
  tariffs.validate();
  const int n = params.n;
  SquareMatrix<Scalar> residuals(n);
  const Scalar coef = Scalar(2) / params.two_n_plus_lambda();
  for (int j = 0; j < n; ++j) {
    Scalar col = tariffs.column_sum(j);
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      residuals.at(i, j) = tariffs.at(i, j) - coef * col;
    }
  }
  return residuals;
}

}  // namespace tradebloc

#endif  // TRADEBLOC_TARIFF_GAME_HPP
