#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "support/checks.hpp"
#include "support/oracles.hpp"
#include "tradebloc/tariff_game.hpp"

using namespace tradebloc;
using namespace tradebloc::testing;

TEST_CASE_TEMPLATE("best response with a quiet world", Scalar, double, Rational) {
  ModelParams<Scalar> p;
  Scalar s = p.two_n_plus_lambda();
  Scalar expected = p.a * p.lambda / (s * s - Scalar(4));
  Scalar got = best_response(p, TariffProfile<Scalar>::zeros(p.n), 0, 1);
  if constexpr (ModelParams<Scalar>::mode == NumericMode::kExactRational) {
    CHECK(got == expected);
  } else {
    CHECK(rel_close(got, to_double(expected), 1e-15));
  }
}

TEST_CASE("the Nash tariff is a best-response fixed point, exactly") {
  ModelParams<Rational> p;
  Rational t_ne = nash_tariff(p);
  CHECK(t_ne == rat(anchors::kNashTariff));
  TariffProfile<Rational> profile = TariffProfile<Rational>::common(p.n, t_ne);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j) CHECK(best_response(p, profile, i, j) == t_ne);
}

TEST_CASE("best response rises with the others' tariffs") {
  ModelParams<double> p;
  double previous = -1.0;
  for (int k = 0; k <= 10; ++k) {
    TariffProfile<double> t(p.n);
    for (int c = 2; c < p.n; ++c) t.at(c, 1) = 0.02 * k;
    double response = best_response(p, t, 0, 1);
    CHECK(response > previous);
    previous = response;
  }
}

TEST_CASE("best response index errors") {
  ModelParams<double> p;
  TariffProfile<double> t(p.n);
  CHECK_THROWS_AS(best_response(p, t, 1, 1), IndexError);
  CHECK_THROWS_AS(best_response(p, t, 0, 9), IndexError);
}

TEST_CASE("closed form vs iteration at the default parameters") {
  ModelParams<double> p;
  NashSolution<double> closed = nash_closed_form(p);
  NashSolution<double> iterated = nash_by_iteration(p);
  CHECK(closed.profile.max_abs_difference(iterated.profile) <= 10 * 1e-12);
  CHECK(rel_close(closed.per_country_welfare, iterated.per_country_welfare, 1e-9));
  CHECK(rel_close(closed.per_country_welfare, to_double(rat(anchors::kNashWelfare)), 1e-12));
}

TEST_CASE("iteration agrees with the closed form across the parameter grid") {
  const double tol = 1e-12;
  for (int n = 3; n <= 12; ++n) {
    for (double lambda : {0.5, 1.0, 4.0, 36.0}) {
      for (double a : {1.0, 12.0}) {
        ModelParams<double> p;
        p.n = n;
        p.a = a;
        p.lambda = lambda;
        NashSolution<double> closed = nash_closed_form(p);
        NashSolution<double> iterated =
            nash_by_iteration(p, TariffProfile<double>::zeros(n), tol, 10000);
        CHECK(closed.profile.max_abs_difference(iterated.profile) <= 10 * tol);
      }
    }
  }
}

TEST_CASE("twenty random starts land on the same fixed point") {
  ModelParams<double> p;
  const double tol = 1e-12;
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> uniform(0.0, to_double(p.a) / 2);
  TariffProfile<double> reference;
  for (int start = 0; start < 20; ++start) {
    TariffProfile<double> initial(p.n);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (i != j) initial.at(i, j) = uniform(rng);
    NashSolution<double> solved = nash_by_iteration(p, initial, tol, 10000);
    if (start == 0) {
      reference = solved.profile;
    } else {
      CHECK(solved.profile.max_abs_difference(reference) <= 10 * tol);
    }
  }
}

TEST_CASE("starting at the fixed point stays there") {
  ModelParams<Rational> p;
  TariffProfile<Rational> fixed = TariffProfile<Rational>::common(p.n, nash_tariff(p));
  NashSolution<Rational> solved =
      nash_by_iteration(p, fixed, NumericTraits<Rational>::default_tolerance(), 10);
  CHECK(solved.iterations == 1);
  CHECK(solved.profile == fixed);
}

TEST_CASE("iteration reports non-convergence") {
  ModelParams<double> p;
  CHECK_THROWS_AS(nash_by_iteration(p, TariffProfile<double>::zeros(p.n), 1e-12, 1),
                  NoConvergenceError);
}

TEST_CASE("the Nash tariff vanishes as lambda does and as the world grows") {
  ModelParams<double> p;
  p.lambda = 1e-9;
  CHECK(nash_tariff(p) < 1e-9);
  double previous = 1.0;
  for (int n = 3; n <= 50; ++n) {
    ModelParams<double> q;
    q.n = n;
    double t = nash_tariff(q);
    CHECK(t > 0);
    CHECK(t < previous);
    previous = t;
  }
  ModelParams<double> wide;
  wide.n = 4000;
  CHECK(nash_tariff(wide) < 1e-4);
}

TEST_CASE("world-optimum residuals: zero only at free trade") {
  ModelParams<Rational> p;
  SquareMatrix<Rational> at_zero = world_optimum_check(p, TariffProfile<Rational>::zeros(p.n));
  CHECK(at_zero.max_abs() == Rational(0));
  SquareMatrix<Rational> at_nash =
      world_optimum_check(p, TariffProfile<Rational>::common(p.n, nash_tariff(p)));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j) CHECK(at_nash.at(i, j) > Rational(0));
}

TEST_CASE("free trade beats random profiles on total welfare") {
  ModelParams<double> p;
  std::mt19937_64 rng(777);
  WelfareReport<double> base = welfare(p, TariffProfile<double>::zeros(p.n));
  double best = 0;
  for (double w : base.total) best += w;
  for (int round = 0; round < 1000; ++round) {
    TariffProfile<double> t = random_admissible_profile(p, rng);
    double total = 0;
    for (double w : welfare(p, t).total) total += w;
    CHECK(total < best);
  }
}

TEST_CASE("welfare falls monotonically along a common tariff, matching the closed quadratic") {
  ModelParams<Rational> p;
  Rational t_ne = nash_tariff(p);
  Rational previous;
  for (int k = 0; k <= 20; ++k) {
    Rational t = Rational(2 * k) * t_ne / Rational(20);
    Rational w = welfare(p, TariffProfile<Rational>::common(p.n, t)).total[0];
    CHECK(w == common_tariff_welfare(p, t));
    if (k > 0) CHECK(w < previous);
    previous = w;
  }
}

TEST_CASE("own-tariff welfare is strictly concave (second-order condition)") {
  for (double lambda : {0.5, 1.0, 4.0, 36.0}) {
    ModelParams<double> p;
    p.lambda = lambda;
    // Analytic second derivative: -2 + 8/(2n+lambda)^2 < 0.
    double s = to_double(p.two_n_plus_lambda());
    CHECK(-2 + 8 / (s * s) < 0);
    TariffProfile<double> t(p.n);
    t.at(0, 1) = 0.05;
    const double h = 1e-4;
    TariffProfile<double> up = t, down = t;
    up.at(0, 1) += h;
    down.at(0, 1) -= h;
    double second = (welfare(p, up).total[0] - 2 * welfare(p, t).total[0] +
                     welfare(p, down).total[0]) /
                    (h * h);
    CHECK(second < 0);
    CHECK(rel_close(second, -2 + 8 / (s * s), 1e-4, 1e-6));
  }
}
