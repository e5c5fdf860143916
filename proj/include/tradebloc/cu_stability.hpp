#ifndef TRADEBLOC_CU_STABILITY_HPP
#define TRADEBLOC_CU_STABILITY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tradebloc/economy.hpp"
#include "tradebloc/errors.hpp"
#include "tradebloc/fta_regime.hpp"
#include "tradebloc/numeric.hpp"
#include "tradebloc/params.hpp"
#include "tradebloc/tariff_profile.hpp"

// Customs unions (jointly chosen external tariffs) and pairwise stability of
// bilateral FTA networks.

namespace tradebloc {

// Disjoint partition of the world; singletons are filled in automatically.
class CuRegime {
 public:
  static CuRegime make(int world_size, std::vector<std::vector<int>> unions) {
    if (world_size < 1) throw InvalidPartitionError("world size must be positive");
    std::vector<int> owner(world_size, -1);
    for (size_t u = 0; u < unions.size(); ++u) {
      if (unions[u].empty()) throw InvalidPartitionError("empty customs union");
      std::sort(unions[u].begin(), unions[u].end());
      for (size_t k = 0; k + 1 < unions[u].size(); ++k) {
        if (unions[u][k] == unions[u][k + 1]) {
          throw InvalidPartitionError("country " + std::to_string(unions[u][k] + 1) +
                                      " listed twice in one union");
        }
      }
      for (int c : unions[u]) {
        if (c < 0 || c >= world_size) {
          throw InvalidPartitionError("country " + std::to_string(c + 1) +
                                      " outside world of size " + std::to_string(world_size));
        }
        if (owner[c] != -1) {
          throw InvalidPartitionError("country " + std::to_string(c + 1) +
                                      " belongs to two customs unions; unions must be disjoint");
        }
        owner[c] = static_cast<int>(u);
      }
    }
    for (int c = 0; c < world_size; ++c)
      if (owner[c] == -1) unions.push_back({c});
    std::sort(unions.begin(), unions.end(), [](const auto& lhs, const auto& rhs) {
      if (lhs.size() != rhs.size()) return lhs.size() > rhs.size();
      return lhs < rhs;
    });
    CuRegime regime;
    regime.world_size_ = world_size;
    regime.unions_ = std::move(unions);
    regime.owner_.assign(world_size, -1);
    for (size_t u = 0; u < regime.unions_.size(); ++u)
      for (int c : regime.unions_[u]) regime.owner_[c] = static_cast<int>(u);
    return regime;
  }

  static CuRegime singletons(int world_size) { return make(world_size, {}); }

  int world_size() const { return world_size_; }
  const std::vector<std::vector<int>>& unions() const { return unions_; }
  int union_of(int country) const { return owner_[country]; }
  int size_of(int union_index) const { return static_cast<int>(unions_[union_index].size()); }

  bool operator==(const CuRegime& other) const = default;

 private:
  int world_size_ = 0;
  std::vector<std::vector<int>> unions_;
  std::vector<int> owner_;
};

// Joint external tariff of a size-c union's members on an outsider j:
// a c lambda / (lambda^2 + 4 n lambda + 4(n^2 - sum of squared sizes of the
// unions not containing j)). The sum runs over singleton unions too; with
// everyone in a singleton the profile collapses to the Nash tariffs.
template <class Scalar>
TariffProfile<Scalar> cu_tariffs(const ModelParams<Scalar>& params, const CuRegime& regime) {
  params.validate();
  if (regime.world_size() != params.n) {
    throw InvalidPartitionError("partition world size does not match the model");
  }
  const int n = params.n;
  const Scalar a = params.a;
  const Scalar lam = params.lambda;
  TariffProfile<Scalar> profile(n);
  for (int j = 0; j < n; ++j) {
    long long squares = 0;
    for (size_t u = 0; u < regime.unions().size(); ++u) {
      if (static_cast<int>(u) == regime.union_of(j)) continue;
      long long c = regime.size_of(static_cast<int>(u));
      squares += c * c;
    }
    Scalar denom = lam * lam + Scalar(4 * n) * lam + Scalar(4) * (Scalar(n * n) - Scalar(squares));
    for (int i = 0; i < n; ++i) {
      if (i == j || regime.union_of(i) == regime.union_of(j)) continue;
      profile.at(i, j) = a * Scalar(regime.size_of(regime.union_of(i))) * lam / denom;
    }
  }
  return profile;
}

// Derivative of a union's group welfare with respect to one member's external
// tariff on outsider j: -2 t_ij + (2 c_l / (2n+lambda)) (a - 2 p_j). Zero at
// the cu_tariffs profile.
template <class Scalar>
Scalar cu_group_welfare_gradient(const ModelParams<Scalar>& params, const CuRegime& regime,
                                 const TariffProfile<Scalar>& tariffs, int i, int j) {
  if (i < 0 || j < 0 || i >= params.n || j >= params.n || i == j) {
    throw IndexError("gradient needs two distinct countries in range");
  }
  if (regime.union_of(i) == regime.union_of(j)) {
    throw IndexError("countries " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                     " share a customs union; internal tariffs are fixed at zero");
  }
  PriceSystem<Scalar> prices = equilibrium_prices(params, tariffs);
  const Scalar group = Scalar(regime.size_of(regime.union_of(i)));
  return Scalar(-2) * tariffs.at(i, j) +
         Scalar(2) * group / params.two_n_plus_lambda() *
             (params.a - Scalar(2) * prices.world[j]);
}

template <class Scalar>
struct SeveranceViolation {
  int cutter = 0;
  int partner = 0;
  Scalar welfare_before;
  Scalar welfare_after;
};

template <class Scalar>
struct LinkViolation {
  int first = 0;
  int second = 0;
  Scalar first_before, first_after;
  Scalar second_before, second_after;
};

template <class Scalar>
struct StabilityVerdict {
  FtaRegime network = FtaRegime::singletons(1);  // the bilateral-link form that was analyzed
  bool decomposed_blocs = false;                 // larger blocs were split into pairwise links
  std::vector<SeveranceViolation<Scalar>> severance_violations;
  std::vector<LinkViolation<Scalar>> link_violations;
  bool pairwise_stable = false;
};

// Pairwise stability over an explicit link set with an arbitrary payoff
// oracle; the model version below instantiates it with regime welfare. A
// network is pairwise stable when no endpoint strictly gains by severing one
// link and no unlinked pair strictly gains (both sides) by adding one.
template <class Scalar, class PayoffFn>
StabilityVerdict<Scalar> pairwise_stability_network(int world_size,
                                                    std::vector<std::pair<int, int>> links,
                                                    PayoffFn&& payoff_of) {
  for (auto& link : links) {
    if (link.first > link.second) std::swap(link.first, link.second);
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());

  StabilityVerdict<Scalar> verdict;
  verdict.network = FtaRegime::from_links(world_size, links);
  std::vector<Scalar> before = payoff_of(links);

  for (size_t idx = 0; idx < links.size(); ++idx) {
    std::vector<std::pair<int, int>> severed = links;
    severed.erase(severed.begin() + static_cast<long>(idx));
    std::vector<Scalar> after = payoff_of(severed);
    for (int cutter : {links[idx].first, links[idx].second}) {
      int partner = cutter == links[idx].first ? links[idx].second : links[idx].first;
      if (after[cutter] > before[cutter]) {
        verdict.severance_violations.push_back({cutter, partner, before[cutter], after[cutter]});
      }
    }
  }
  for (int u = 0; u < world_size; ++u) {
    for (int v = u + 1; v < world_size; ++v) {
      if (std::binary_search(links.begin(), links.end(), std::make_pair(u, v))) continue;
      std::vector<std::pair<int, int>> extended = links;
      extended.push_back({u, v});
      std::vector<Scalar> after = payoff_of(extended);
      if (after[u] > before[u] && after[v] > before[v]) {
        verdict.link_violations.push_back({u, v, before[u], after[u], before[v], after[v]});
      }
    }
  }
  verdict.pairwise_stable =
      verdict.severance_violations.empty() && verdict.link_violations.empty();
  return verdict;
}

// Pairwise stability of an FTA regime under the model's equilibrium welfare.
// Blocs larger than two are decomposed into their pairwise links (flagged in
// the verdict); the tariff equilibrium only sees the adjacency relation, so
// the decomposition leaves tariffs and welfare unchanged.
template <class Scalar>
StabilityVerdict<Scalar> pairwise_stability(const ModelParams<Scalar>& params,
                                            const FtaRegime& regime) {
  params.validate();
  if (regime.world_size() != params.n) {
    throw InvalidRegimeError("regime world size does not match the model");
  }
  std::vector<std::pair<int, int>> links;
  bool decomposed = false;
  for (const auto& bloc : regime.blocs()) {
    if (bloc.size() > 2) decomposed = true;
    for (size_t x = 0; x < bloc.size(); ++x)
      for (size_t y = x + 1; y < bloc.size(); ++y) links.push_back({bloc[x], bloc[y]});
  }
  auto payoff_of = [&params](const std::vector<std::pair<int, int>>& linkset) {
    return regime_welfare(params, FtaRegime::from_links(params.n, linkset)).total;
  };
  StabilityVerdict<Scalar> verdict =
      pairwise_stability_network<Scalar>(params.n, std::move(links), payoff_of);
  verdict.decomposed_blocs = decomposed;
  return verdict;
}

}  // namespace tradebloc

#endif  // TRADEBLOC_CU_STABILITY_HPP
