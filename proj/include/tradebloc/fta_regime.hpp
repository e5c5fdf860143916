#ifndef TRADEBLOC_FTA_REGIME_HPP
#define TRADEBLOC_FTA_REGIME_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tradebloc/economy.hpp"
#include "tradebloc/errors.hpp"
#include "tradebloc/numeric.hpp"
#include "tradebloc/params.hpp"
#include "tradebloc/tariff_profile.hpp"

// FTA regimes: possibly overlapping blocs with zero internal tariffs, each
// member choosing its own external tariffs. Equilibrium tariffs, welfare and
// the single-FTA closed forms live here.

namespace tradebloc {

// Canonical form: members sorted inside each bloc, singleton blocs inserted
// for unaffiliated countries so the union covers the world, blocs ordered by
// (size descending, then lexicographically). No bloc may nest inside another.
class FtaRegime {
 public:
  static FtaRegime make(int world_size, std::vector<std::vector<int>> blocs) {
    if (world_size < 1) throw InvalidRegimeError("world size must be positive");
    std::vector<char> covered(world_size, 0);
    for (auto& bloc : blocs) {
      if (bloc.empty()) throw InvalidRegimeError("empty bloc");
      std::sort(bloc.begin(), bloc.end());
      for (size_t k = 0; k + 1 < bloc.size(); ++k) {
        if (bloc[k] == bloc[k + 1]) {
          throw InvalidRegimeError("country " + std::to_string(bloc[k] + 1) +
                                   " listed twice in one bloc");
        }
      }
      for (int c : bloc) {
        if (c < 0 || c >= world_size) {
          throw InvalidRegimeError("country " + std::to_string(c + 1) + " outside world of size " +
                                   std::to_string(world_size));
        }
        covered[c] = 1;
      }
    }
    for (size_t x = 0; x < blocs.size(); ++x) {
      for (size_t y = 0; y < blocs.size(); ++y) {
        if (x == y) continue;
        if (std::includes(blocs[y].begin(), blocs[y].end(), blocs[x].begin(), blocs[x].end())) {
          throw InvalidRegimeError("redundant bloc: one bloc is contained in another");
        }
      }
    }
    for (int c = 0; c < world_size; ++c)
      if (!covered[c]) blocs.push_back({c});
    std::sort(blocs.begin(), blocs.end(), [](const auto& lhs, const auto& rhs) {
      if (lhs.size() != rhs.size()) return lhs.size() > rhs.size();
      return lhs < rhs;
    });
    FtaRegime regime;
    regime.world_size_ = world_size;
    regime.blocs_ = std::move(blocs);
    return regime;
  }

  static FtaRegime singletons(int world_size) { return make(world_size, {}); }

  // The regime with one FTA formed by the first `fta_size` countries.
  static FtaRegime single_bloc(int world_size, int fta_size) {
    std::vector<int> members(fta_size);
    for (int c = 0; c < fta_size; ++c) members[c] = c;
    return make(world_size, {members});
  }

  static FtaRegime from_links(int world_size, const std::vector<std::pair<int, int>>& links) {
    std::vector<std::vector<int>> blocs;
    blocs.reserve(links.size());
    for (auto [u, v] : links) blocs.push_back({u, v});
    return make(world_size, std::move(blocs));
  }

  int world_size() const { return world_size_; }
  const std::vector<std::vector<int>>& blocs() const { return blocs_; }

  bool share_bloc(int i, int k) const {
    for (const auto& bloc : blocs_) {
      if (std::binary_search(bloc.begin(), bloc.end(), i) &&
          std::binary_search(bloc.begin(), bloc.end(), k))
        return true;
    }
    return false;
  }

  bool operator==(const FtaRegime& other) const = default;

 private:
  int world_size_ = 0;
  std::vector<std::vector<int>> blocs_;
};

// Per country k, the countries sharing no FTA with k.
struct OutsiderIndex {
  std::vector<std::vector<int>> outsiders;
  std::vector<int> counts;

  bool is_outsider(int i, int k) const {
    const auto& row = outsiders[k];
    return std::binary_search(row.begin(), row.end(), i);
  }
};

inline OutsiderIndex outsider_sets_of(const FtaRegime& regime) {
  const int n = regime.world_size();
  OutsiderIndex index;
  index.outsiders.resize(n);
  index.counts.resize(n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (i != k && !regime.share_bloc(i, k)) index.outsiders[k].push_back(i);
    }
    index.counts[k] = static_cast<int>(index.outsiders[k].size());
  }
  return index;
}

template <class Scalar>
OutsiderIndex outsider_sets(const ModelParams<Scalar>& params, const FtaRegime& regime) {
  params.validate();
  if (regime.world_size() != params.n) {
    throw InvalidRegimeError("regime world size does not match the model");
  }
  return outsider_sets_of(regime);
}

// Equilibrium external tariff on a country faced by `outsider_count` countries
// with which it has no FTA: a lambda / (lambda^2 + 4 n lambda + 4(n^2 - n_k)).
template <class Scalar>
Scalar external_tariff(const ModelParams<Scalar>& params, int outsider_count) {
  const Scalar lam = params.lambda;
  return params.a * lam /
         (lam * lam + Scalar(4 * params.n) * lam +
          Scalar(4) * Scalar(params.n * params.n - outsider_count));
}

// Stage-3 equilibrium tariffs of an FTA regime: zero inside blocs, and the
// common external tariff on k from each of k's outsiders. The tariff depends
// only on how many outsiders k has, so members never raise tariffs on
// non-members relative to the no-FTA Nash benchmark.
template <class Scalar>
TariffProfile<Scalar> regime_tariffs(const ModelParams<Scalar>& params, const FtaRegime& regime) {
  OutsiderIndex index = outsider_sets(params, regime);
  TariffProfile<Scalar> profile(params.n);
  for (int k = 0; k < params.n; ++k) {
    if (index.counts[k] == 0) continue;
    Scalar tariff = external_tariff(params, index.counts[k]);
    for (int i : index.outsiders[k]) profile.at(i, k) = tariff;
  }
  return profile;
}

// Welfare of every country at the regime's equilibrium tariffs, evaluated by
// the surplus decomposition.
template <class Scalar>
WelfareReport<Scalar> regime_welfare(const ModelParams<Scalar>& params, const FtaRegime& regime) {
  return welfare(params, regime_tariffs(params, regime));
}

template <class Scalar>
struct SingleFtaWelfare {
  int fta_size = 0;
  Scalar tariff_on_member;    // external tariff outsiders impose on a member
  Scalar tariff_on_outsider;  // tariff everyone imposes on a non-member (the Nash tariff)
  Scalar member_welfare;
  // Undefined (not zero) when the FTA spans the whole world.
  std::optional<Scalar> outsider_welfare;
};

// Closed-form welfare under the regime with one FTA of the given size: the
// quadratic forms of the member and non-member welfare in the two external
// tariffs, scaled by r = 2(2n+lambda)^2.
template <class Scalar>
SingleFtaWelfare<Scalar> single_fta_welfare(const ModelParams<Scalar>& params, int fta_size) {
  params.validate();
  const int n = params.n;
  if (fta_size < 1 || fta_size > n) {
    throw RangeError("FTA size " + std::to_string(fta_size) + " outside [1, " +
                     std::to_string(n) + "]");
  }
  const int m = fta_size;
  const Scalar a = params.a;
  const Scalar lam = params.lambda;
  const Scalar r = params.welfare_scale();
  const Scalar base = Scalar(n) * a * a * (Scalar(n) + lam) * params.two_n_plus_lambda();
  const Scalar t_member = external_tariff(params, n - m);
  const Scalar t_outsider = external_tariff(params, n - 1);

  SingleFtaWelfare<Scalar> out;
  out.fta_size = m;
  out.tariff_on_member = t_member;
  out.tariff_on_outsider = t_outsider;

  {
    Scalar acc = base;
    acc += Scalar(4) * (Scalar(2 * m) + lam) * Scalar((n - m) * (n - m)) * t_member * t_member;
    acc -= Scalar(4) * a * lam * Scalar((n - m) * (n - m)) * t_member;
    acc += Scalar(2 * (n - m)) * (Scalar(4 - 8 * n) - Scalar(4 * n) * lam - lam * lam) *
           t_outsider * t_outsider;
    acc += Scalar(4) * a * lam * Scalar((n - m) * (n - 1)) * t_outsider;
    out.member_welfare = acc / r;
  }
  if (m < n) {
    Scalar acc = base;
    acc -= Scalar(2 * m) * (lam * lam + Scalar(4 * n) * lam + Scalar(8 * m * n - 4 * m * m)) *
           t_member * t_member;
    acc -= Scalar(2) *
           (Scalar(n - m - 1) * lam * lam - Scalar(2) * Scalar(2 * m * n - n * n + 1) * lam +
            Scalar(4) * Scalar(n * n - 2 * m * n - n + m)) *
           t_outsider * t_outsider;
    acc += Scalar(4) * a * lam * Scalar(m * (n - m)) * t_member;
    acc -= Scalar(4) * a * lam * Scalar(m * (n - 1)) * t_outsider;
    out.outsider_welfare = acc / r;
  }
  return out;
}

template <class Scalar>
struct TradeEffectReport {
  int fta_size = 0;
  // Domestic price of a member's good inside a fellow member, and that
  // member's import of it, before (no FTA) and after (FTA of the given size).
  Scalar member_price_before, member_price_after;
  Scalar member_import_before, member_import_after;
  // Same quantities seen from a non-member; absent when the FTA is global.
  std::optional<Scalar> outsider_price_before, outsider_price_after;
  std::optional<Scalar> outsider_import_before, outsider_import_after;
  // True when every expected strict inequality holds. A false value is a model
  // invariant violation and is surfaced by the CLI as such.
  bool inequalities_hold = false;
};

// Price and import comparison between the no-FTA regime and a single FTA of
// size m: members import more from each other at lower prices, non-members
// import less at higher prices (external trade diversion).
template <class Scalar>
TradeEffectReport<Scalar> trade_effect_report(const ModelParams<Scalar>& params, int fta_size) {
  params.validate();
  const int n = params.n;
  if (fta_size < 2 || fta_size > n) {
    throw RangeError("trade-effect comparison needs an FTA size in [2, " + std::to_string(n) +
                     "], got " + std::to_string(fta_size));
  }
  PriceSystem<Scalar> before =
      equilibrium_prices(params, regime_tariffs(params, FtaRegime::singletons(n)));
  PriceSystem<Scalar> after =
      equilibrium_prices(params, regime_tariffs(params, FtaRegime::single_bloc(n, fta_size)));

  auto import_of = [&params](const PriceSystem<Scalar>& prices, int country, int good) {
    return params.a - Scalar(2) * prices.domestic.at(country, good);
  };

  TradeEffectReport<Scalar> report;
  report.fta_size = fta_size;
  report.member_price_before = before.domestic.at(1, 0);
  report.member_price_after = after.domestic.at(1, 0);
  report.member_import_before = import_of(before, 1, 0);
  report.member_import_after = import_of(after, 1, 0);
  bool ok = report.member_price_before > report.member_price_after &&
            report.member_import_before < report.member_import_after;
  if (fta_size < n) {
    report.outsider_price_before = before.domestic.at(fta_size, 0);
    report.outsider_price_after = after.domestic.at(fta_size, 0);
    report.outsider_import_before = import_of(before, fta_size, 0);
    report.outsider_import_after = import_of(after, fta_size, 0);
    ok = ok && *report.outsider_price_before < *report.outsider_price_after &&
         *report.outsider_import_before > *report.outsider_import_after;
  }
  report.inequalities_hold = ok;
  return report;
}

}  // namespace tradebloc

#endif  // TRADEBLOC_FTA_REGIME_HPP
