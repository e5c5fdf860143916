#ifndef TRADEBLOC_ECONOMY_HPP
#define TRADEBLOC_ECONOMY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tradebloc/errors.hpp"
#include "tradebloc/numeric.hpp"
#include "tradebloc/params.hpp"
#include "tradebloc/tariff_profile.hpp"

// Market-equilibrium engine: prices, trade flows, welfare and welfare
// gradients for an arbitrary admissible tariff profile. Goods are identified
// with their unique exporter, so everything is country-indexed.

namespace tradebloc {

template <class Scalar>
struct PriceSystem {
  // world[i]: exporter i's domestic price of its own good.
  std::vector<Scalar> world;
  // domestic(j, i): price of good i inside country j; equals world[i] + t(j, i).
  SquareMatrix<Scalar> domestic;
};

template <class Scalar>
struct TradeFlows {
  // All matrices are (country, good).
  SquareMatrix<Scalar> demand;
  SquareMatrix<Scalar> supply;
  SquareMatrix<Scalar> imports;  // zero on the diagonal (the exporter imports nothing of its own good)
  SquareMatrix<Scalar> exports;  // exports(j, i): exporter i's shipments to country j
};

template <class Scalar>
struct WelfareReport {
  std::vector<Scalar> total;
  // Filled by the decomposition route; the closed-form route reports totals only.
  std::vector<Scalar> consumer_surplus;
  std::vector<Scalar> producer_surplus;
  std::vector<Scalar> tariff_revenue;

  bool has_decomposition() const { return !consumer_surplus.empty(); }
};

template <class Scalar>
struct MarginalWelfare {
  Scalar own;       // dW_i / dt_ij for the country imposing the tariff
  Scalar exporter;  // dW_j / dt_ij for the country whose good is taxed
  Scalar third;     // dW_k / dt_ij, identical for every third country k
  Scalar world;     // sum over all countries
};

namespace detail {

template <class Scalar>
Scalar import_floor(const ModelParams<Scalar>& params) {
  if constexpr (NumericTraits<Scalar>::mode == NumericMode::kExactRational) {
    (void)params;
    return Scalar(0);
  } else {
    // Absorb last-bit roundoff on profiles that sit exactly on the boundary.
    return -1e-12 * params.a;
  }
}

}  // namespace detail

// Competitive equilibrium prices under a tariff profile: the no-arbitrage and
// market-clearing conditions solve in closed form, world price
// (n a - 2 sum_k t_ki) / (2n + lambda).
template <class Scalar>
PriceSystem<Scalar> equilibrium_prices(const ModelParams<Scalar>& params,
                                       const TariffProfile<Scalar>& tariffs) {
  params.validate();
  if (tariffs.world_size() != params.n) {
    throw InvalidProfileError("tariff profile is " + std::to_string(tariffs.world_size()) +
                              "x" + std::to_string(tariffs.world_size()) + " but world size is " +
                              std::to_string(params.n));
  }
  tariffs.validate();

  const int n = params.n;
  const Scalar denom = params.two_n_plus_lambda();
  PriceSystem<Scalar> prices;
  prices.world.resize(n);
  prices.domestic = SquareMatrix<Scalar>(n);
  for (int i = 0; i < n; ++i) {
    prices.world[i] = (Scalar(n) * params.a - Scalar(2) * tariffs.column_sum(i)) / denom;
    for (int j = 0; j < n; ++j) {
      prices.domestic.at(j, i) = prices.world[i] + (j == i ? Scalar(0) : tariffs.at(j, i));
    }
  }

  const Scalar floor = detail::import_floor(params);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Scalar imported = params.a - Scalar(2) * prices.domestic.at(j, i);
      if (imported < floor) {
        throw ProhibitiveTariffError("profile is prohibitive: country " + std::to_string(j + 1) +
                                     "'s import of good " + std::to_string(i + 1) +
                                     " would be negative");
      }
    }
  }
  return prices;
}

template <class Scalar>
TradeFlows<Scalar> trade_flows(const ModelParams<Scalar>& params,
                               const PriceSystem<Scalar>& prices) {
  const int n = params.n;
  TradeFlows<Scalar> flows;
  flows.demand = SquareMatrix<Scalar>(n);
  flows.supply = SquareMatrix<Scalar>(n);
  flows.imports = SquareMatrix<Scalar>(n);
  flows.exports = SquareMatrix<Scalar>(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Scalar& p = prices.domestic.at(j, i);
      flows.demand.at(j, i) = params.a - p;
      Scalar slope = (j == i) ? Scalar(1) + params.lambda : Scalar(1);
      flows.supply.at(j, i) = slope * p;
      if (j != i) flows.imports.at(j, i) = flows.demand.at(j, i) - flows.supply.at(j, i);
    }
  }
  // Exporter i's shipments to country j: own excess supply minus what every
  // other importer absorbs.
  for (int i = 0; i < n; ++i) {
    Scalar excess = flows.supply.at(i, i) - flows.demand.at(i, i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Scalar others(0);
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) others += flows.imports.at(k, i);
      flows.exports.at(j, i) = excess - others;
    }
  }
  return flows;
}

// Welfare by direct decomposition: consumer surplus + producer surplus +
// tariff revenue, all evaluated at the equilibrium prices.
template <class Scalar>
WelfareReport<Scalar> welfare(const ModelParams<Scalar>& params,
                              const TariffProfile<Scalar>& tariffs) {
  PriceSystem<Scalar> prices = equilibrium_prices(params, tariffs);
  TradeFlows<Scalar> flows = trade_flows(params, prices);
  const int n = params.n;
  const Scalar half = scalar_ratio<Scalar>(1, 2);

  WelfareReport<Scalar> report;
  report.total.resize(n);
  report.consumer_surplus.assign(n, Scalar(0));
  report.producer_surplus.assign(n, Scalar(0));
  report.tariff_revenue.assign(n, Scalar(0));
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < n; ++g) {
      const Scalar& p = prices.domestic.at(i, g);
      Scalar slope = (g == i) ? Scalar(1) + params.lambda : Scalar(1);
      report.consumer_surplus[i] += half * (params.a - p) * (params.a - p);
      report.producer_surplus[i] += half * slope * p * p;
      if (g != i) report.tariff_revenue[i] += tariffs.at(i, g) * flows.imports.at(i, g);
    }
    report.total[i] = report.consumer_surplus[i] + report.producer_surplus[i] + report.tariff_revenue[i];
  }
  return report;
}

// Welfare through the expanded closed form: r W_i as an explicit quadratic in
// the tariff entries, r = 2(2n+lambda)^2. Agrees with the decomposition route
// on every admissible profile; serves as the second leg of the dual-route check.
template <class Scalar>
WelfareReport<Scalar> welfare_closed_form(const ModelParams<Scalar>& params,
                                          const TariffProfile<Scalar>& tariffs) {
  // Same admissibility gate as the decomposition route.
  equilibrium_prices(params, tariffs);

  const int n = params.n;
  const Scalar a = params.a;
  const Scalar lam = params.lambda;
  const Scalar r = params.welfare_scale();
  const Scalar base = Scalar(n) * a * a * (Scalar(n) + lam) * params.two_n_plus_lambda();
  const Scalar own_quad = Scalar(2) * params.two_n_plus_lambda() * params.two_n_plus_lambda() - Scalar(8);

  WelfareReport<Scalar> report;
  report.total.resize(n);
  for (int i = 0; i < n; ++i) {
    Scalar acc = base;
    Scalar faced(0);  // sum of tariffs the world imposes on i's good
    for (int k = 0; k < n; ++k)
      if (k != i) faced += tariffs.at(k, i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Scalar rest(0);  // tariffs on good j from everyone but i and j
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) rest += tariffs.at(k, j);
      const Scalar& own = tariffs.at(i, j);
      acc += own * (Scalar(4) * a * lam + Scalar(16) * rest);
      acc -= own * own * own_quad;
      acc += Scalar(4) * a * lam * rest + Scalar(8) * rest * rest;
    }
    acc += Scalar(4) * (Scalar(2) + lam) * faced * faced;
    acc -= Scalar(4) * a * lam * Scalar(n - 1) * faced;
    report.total[i] = acc / r;
  }
  return report;
}

// Analytic welfare gradients with respect to a single tariff t_ij.
template <class Scalar>
MarginalWelfare<Scalar> marginal_welfare(const ModelParams<Scalar>& params,
                                         const TariffProfile<Scalar>& tariffs, int i, int j) {
  if (i == j) throw IndexError("marginal welfare needs two distinct countries");
  if (i < 0 || j < 0 || i >= params.n || j >= params.n) {
    throw IndexError("country index out of range");
  }
  PriceSystem<Scalar> prices = equilibrium_prices(params, tariffs);
  const Scalar& world_j = prices.world[j];
  const Scalar a = params.a;
  const Scalar lam = params.lambda;
  const Scalar s = params.two_n_plus_lambda();
  const Scalar two_over = Scalar(2) / s;

  MarginalWelfare<Scalar> grad;
  grad.own = Scalar(-2) * tariffs.at(i, j) + two_over * (a - Scalar(2) * world_j);
  grad.exporter = two_over * (a - (Scalar(2) + lam) * world_j);
  grad.third = two_over * (a - Scalar(2) * world_j);
  grad.world = Scalar(-2) * tariffs.at(i, j) + two_over * (Scalar(params.n) * a - s * world_j);
  return grad;
}

}  // namespace tradebloc

#endif  // TRADEBLOC_ECONOMY_HPP
