#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/checks.hpp"
#include "support/oracles.hpp"
#include "tradebloc/economy.hpp"

using namespace tradebloc;
using namespace tradebloc::testing;

namespace {

template <class Scalar>
ModelParams<Scalar> defaults() {
  return ModelParams<Scalar>{};
}

}  // namespace

TEST_CASE("params validation") {
  ModelParams<double> p;
  p.n = 1;
  CHECK_THROWS_AS(p.validate(), InvalidParamsError);
  p.n = 2;
  CHECK_THROWS_AS(p.validate(), InvalidParamsError);
  p.allow_two_country_world = true;
  CHECK_NOTHROW(p.validate());
  p = ModelParams<double>{};
  p.a = 0;
  CHECK_THROWS_AS(p.validate(), InvalidParamsError);
  p = ModelParams<double>{};
  p.lambda = -1;
  CHECK_THROWS_AS(p.validate(), InvalidParamsError);
}

TEST_CASE("profile shape validation") {
  ModelParams<double> p;
  TariffProfile<double> t(8);
  t.at(3, 3) = 0.1;
  CHECK_THROWS_AS(equilibrium_prices(p, t), InvalidProfileError);
  t.at(3, 3) = 0;
  t.at(0, 1) = -0.5;
  CHECK_THROWS_AS(equilibrium_prices(p, t), InvalidProfileError);
  TariffProfile<double> wrong(5);
  CHECK_THROWS_AS(equilibrium_prices(p, wrong), InvalidProfileError);
}

TEST_CASE_TEMPLATE("zero tariffs give the flat free-trade price", Scalar, double, Rational) {
  ModelParams<Scalar> p = defaults<Scalar>();
  PriceSystem<Scalar> prices = equilibrium_prices(p, TariffProfile<Scalar>::zeros(p.n));
  Scalar expected = scalar_ratio<Scalar>(24, 13);  // n a / (2n + lambda)
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if constexpr (ModelParams<Scalar>::mode == NumericMode::kExactRational) {
        CHECK(prices.domestic.at(j, i) == expected);
      } else {
        CHECK(rel_close(prices.domestic.at(j, i), to_double(expected), 1e-15));
      }
    }
  }
}

TEST_CASE("closed-form prices match the dense linear solve on random profiles") {
  ModelParams<double> p;
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 50; ++round) {
    TariffProfile<double> t = random_admissible_profile(p, rng);
    PriceSystem<double> fast = equilibrium_prices(p, t);
    PriceSystem<double> slow = prices_by_linear_solve(p, t);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        CHECK(rel_close(fast.domestic.at(j, i), slow.domestic.at(j, i), 1e-12));
  }
}

TEST_CASE("exact prices match the exact linear solve") {
  ModelParams<Rational> p;
  std::mt19937_64 rng(7);
  TariffProfile<Rational> t = random_admissible_profile(p, rng);
  PriceSystem<Rational> fast = equilibrium_prices(p, t);
  PriceSystem<Rational> slow = prices_by_linear_solve(p, t);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) CHECK(fast.domestic.at(j, i) == slow.domestic.at(j, i));
}

TEST_CASE_TEMPLATE("no-arbitrage holds exactly", Scalar, double, Rational) {
  ModelParams<Scalar> p = defaults<Scalar>();
  std::mt19937_64 rng(99);
  TariffProfile<Scalar> t = random_admissible_profile(p, rng);
  PriceSystem<Scalar> prices = equilibrium_prices(p, t);
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (j == i) continue;
      CHECK(prices.domestic.at(j, i) == prices.world[i] + t.at(j, i));
    }
  }
}

TEST_CASE("common Nash tariff shifts every domestic price by (2+lambda)t/(2n+lambda)") {
  ModelParams<Rational> p;
  Rational t_ne = rat(anchors::kNashTariff);
  PriceSystem<Rational> prices =
      equilibrium_prices(p, TariffProfile<Rational>::common(p.n, t_ne));
  Rational expected =
      rat(anchors::kZeroTariffPrice) + (Rational(2) + p.lambda) * t_ne / p.two_n_plus_lambda();
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (j != i) CHECK(prices.domestic.at(j, i) == expected);
}

TEST_CASE("prohibitive profiles are rejected after the solve") {
  ModelParams<double> p;
  TariffProfile<double> t(p.n);
  t.at(0, 1) = 5.0;  // past the prohibitive threshold (96 + 50 t)/52 > a/2
  CHECK_THROWS_AS(equilibrium_prices(p, t), ProhibitiveTariffError);
}

TEST_CASE_TEMPLATE("market clearing and export-import identity", Scalar, double, Rational) {
  ModelParams<Scalar> p = defaults<Scalar>();
  std::mt19937_64 rng(4);
  for (int round = 0; round < 20; ++round) {
    TariffProfile<Scalar> t = random_admissible_profile(p, rng);
    PriceSystem<Scalar> prices = equilibrium_prices(p, t);
    TradeFlows<Scalar> flows = trade_flows(p, prices);
    for (int good = 0; good < p.n; ++good) {
      Scalar demand(0), supply(0), imports(0), exports(0);
      for (int c = 0; c < p.n; ++c) {
        demand += flows.demand.at(c, good);
        supply += flows.supply.at(c, good);
        if (c != good) {
          imports += flows.imports.at(c, good);
          exports += flows.exports.at(c, good);
          if constexpr (ModelParams<Scalar>::mode == NumericMode::kExactRational) {
            CHECK(flows.exports.at(c, good) == flows.imports.at(c, good));
          } else {
            CHECK(rel_close(flows.exports.at(c, good), flows.imports.at(c, good), 1e-12));
          }
        }
      }
      if constexpr (ModelParams<Scalar>::mode == NumericMode::kExactRational) {
        CHECK(demand == supply);
        CHECK(imports == exports);
      } else {
        CHECK(abs_value(demand - supply) <= 1e-9 * to_double(p.a));
      }
    }
  }
}

TEST_CASE_TEMPLATE("zero-tariff imports", Scalar, double, Rational) {
  ModelParams<Scalar> p = defaults<Scalar>();
  TradeFlows<Scalar> flows =
      trade_flows(p, equilibrium_prices(p, TariffProfile<Scalar>::zeros(p.n)));
  Scalar expected = scalar_ratio<Scalar>(108, 13);  // about 8.307692
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (j != i) {
        if constexpr (ModelParams<Scalar>::mode == NumericMode::kExactRational) {
          CHECK(flows.imports.at(j, i) == expected);
        } else {
          CHECK(rel_close(flows.imports.at(j, i), to_double(expected), 1e-14));
        }
      }
}

TEST_CASE_TEMPLATE("free-trade welfare matches the published level", Scalar, double, Rational) {
  ModelParams<Scalar> p = defaults<Scalar>();
  WelfareReport<Scalar> report = welfare(p, TariffProfile<Scalar>::zeros(p.n));
  if constexpr (ModelParams<Scalar>::mode == NumericMode::kExactRational) {
    for (int c = 0; c < p.n; ++c) CHECK(report.total[c] == rat(anchors::kGlobalWelfare));
  } else {
    for (int c = 0; c < p.n; ++c) CHECK(rel_close(report.total[c], 487.384615384615, 1e-12));
  }
}

TEST_CASE("welfare decomposition sums exactly by construction") {
  ModelParams<double> p;
  std::mt19937_64 rng(11);
  TariffProfile<double> t = random_admissible_profile(p, rng);
  WelfareReport<double> report = welfare(p, t);
  REQUIRE(report.has_decomposition());
  for (int c = 0; c < p.n; ++c) {
    CHECK(report.total[c] ==
          report.consumer_surplus[c] + report.producer_surplus[c] + report.tariff_revenue[c]);
  }
}

TEST_CASE("Nash welfare agrees with the free-trade-minus-loss expression exactly") {
  ModelParams<Rational> p;
  Rational via_decomposition =
      welfare(p, TariffProfile<Rational>::common(p.n, rat(anchors::kNashTariff))).total[0];
  CHECK(via_decomposition == nash_welfare_expression(p));
  CHECK(via_decomposition == rat(anchors::kNashWelfare));
}

TEST_CASE_TEMPLATE("both welfare routes agree on random profiles", Scalar, double, Rational) {
  ModelParams<Scalar> p = defaults<Scalar>();
  std::mt19937_64 rng(2718);
  const int rounds = ModelParams<Scalar>::mode == NumericMode::kExactRational ? 50 : 200;
  for (int round = 0; round < rounds; ++round) {
    TariffProfile<Scalar> t = random_admissible_profile(p, rng);
    WelfareReport<Scalar> direct = welfare(p, t);
    WelfareReport<Scalar> closed = welfare_closed_form(p, t);
    for (int c = 0; c < p.n; ++c) {
      if constexpr (ModelParams<Scalar>::mode == NumericMode::kExactRational) {
        CHECK(direct.total[c] == closed.total[c]);
      } else {
        CHECK(rel_close(direct.total[c], closed.total[c], 1e-9));
      }
    }
  }
}

TEST_CASE("closed-form welfare at zero tariffs reduces to the constant term") {
  ModelParams<Rational> p;
  WelfareReport<Rational> closed = welfare_closed_form(p, TariffProfile<Rational>::zeros(p.n));
  Rational expected = Rational(p.n) * p.a * p.a * (Rational(p.n) + p.lambda) *
                      p.two_n_plus_lambda() / p.welfare_scale();
  for (int c = 0; c < p.n; ++c) CHECK(closed.total[c] == expected);
}

TEST_CASE("a small unilateral tariff from free trade raises own welfare") {
  ModelParams<double> p;
  TariffProfile<double> t(p.n);
  double base = welfare(p, t).total[0];
  t.at(0, 1) = 1e-3;
  CHECK(welfare(p, t).total[0] > base);
}

TEST_CASE("analytic gradients match central finite differences") {
  ModelParams<double> p;
  std::mt19937_64 rng(31337);
  const double step = 1e-5 * p.a;
  for (int round = 0; round < 40; ++round) {
    TariffProfile<double> t = random_admissible_profile(p, rng);
    int i = static_cast<int>(rng() % p.n);
    int j = static_cast<int>(rng() % p.n);
    if (i == j) j = (j + 1) % p.n;
    if (t.at(i, j) < step) t.at(i, j) = step;
    MarginalWelfare<double> grad = marginal_welfare(p, t, i, j);
    FiniteDifferences fd = finite_difference_welfare(p, t, i, j, step);
    CHECK(rel_close(grad.own, fd.own, 1e-6, 1e-8 * p.a));
    CHECK(rel_close(grad.exporter, fd.exporter, 1e-6, 1e-8 * p.a));
    CHECK(rel_close(grad.third, fd.third, 1e-6, 1e-8 * p.a));
    CHECK(rel_close(grad.world, fd.world, 1e-6, 1e-8 * p.a));
    CHECK(rel_close(grad.world, grad.own + grad.exporter + (p.n - 2) * grad.third, 1e-12,
                    1e-12));
  }
}

TEST_CASE("own-tariff gradient vanishes exactly at the Nash profile") {
  ModelParams<Rational> p;
  TariffProfile<Rational> nash = TariffProfile<Rational>::common(p.n, rat(anchors::kNashTariff));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j) CHECK(marginal_welfare(p, nash, i, j).own == Rational(0));
}

TEST_CASE("third countries gain from a tariff at free trade") {
  ModelParams<double> p;
  MarginalWelfare<double> grad = marginal_welfare(p, TariffProfile<double>::zeros(p.n), 0, 1);
  CHECK(grad.third > 0);
}

TEST_CASE("gradient index errors") {
  ModelParams<double> p;
  TariffProfile<double> t(p.n);
  CHECK_THROWS_AS(marginal_welfare(p, t, 2, 2), IndexError);
  CHECK_THROWS_AS(marginal_welfare(p, t, -1, 3), IndexError);
  CHECK_THROWS_AS(marginal_welfare(p, t, 0, p.n), IndexError);
}

TEST_CASE("a tariff rise lowers the world price and raises the taxed importer's price") {
  ModelParams<Rational> p;
  std::mt19937_64 rng(5150);
  TariffProfile<Rational> t = random_admissible_profile(p, rng);
  PriceSystem<Rational> before = equilibrium_prices(p, t);
  TariffProfile<Rational> bumped = t;
  bumped.at(3, 0) += scalar_ratio<Rational>(1, 100);
  PriceSystem<Rational> after = equilibrium_prices(p, bumped);
  CHECK(after.world[0] < before.world[0]);
  CHECK(after.domestic.at(3, 0) > before.domestic.at(3, 0));
}
