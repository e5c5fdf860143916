#ifndef TRADEBLOC_SEQUENTIAL_GAME_HPP
#define TRADEBLOC_SEQUENTIAL_GAME_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tradebloc/errors.hpp"
#include "tradebloc/fta_regime.hpp"
#include "tradebloc/numeric.hpp"
#include "tradebloc/params.hpp"

// The three-stage sequential FTA formation game: countries decide in a fixed
// order whether to join the (single) forming FTA; under the consent rule the
// incumbents vote on each applicant, under the open rule applicants join
// unconditionally; external tariffs then settle at the regime equilibrium.
// Solved two ways: by the closed-form characterization, and by exhaustive
// backward induction over the game tree.

namespace tradebloc {

enum class AccessRule { kWithConsent, kWithoutConsent };

inline const char* access_rule_name(AccessRule rule) {
  return rule == AccessRule::kWithConsent ? "consent" : "open";
}

struct MoveOrder {
  std::vector<int> sequence;  // country ids, position = stage

  static MoveOrder identity(int world_size) {
    MoveOrder order;
    order.sequence.resize(world_size);
    for (int c = 0; c < world_size; ++c) order.sequence[c] = c;
    return order;
  }

  static MoveOrder reversed(int world_size) {
    MoveOrder order = identity(world_size);
    std::reverse(order.sequence.begin(), order.sequence.end());
    return order;
  }

  static MoveOrder of(std::vector<int> sequence, int world_size) {
    if (static_cast<int>(sequence.size()) != world_size) {
      throw InvalidParamsError("move order must list every country exactly once");
    }
    std::vector<char> seen(world_size, 0);
    for (int c : sequence) {
      if (c < 0 || c >= world_size || seen[c]) {
        throw InvalidParamsError("move order is not a permutation of the countries");
      }
      seen[c] = 1;
    }
    MoveOrder order;
    order.sequence = std::move(sequence);
    return order;
  }

  bool operator==(const MoveOrder&) const = default;
};

struct Vote {
  int voter = 0;
  bool accept = false;
  bool operator==(const Vote&) const = default;
};

struct StageDecision {
  int stage = 0;  // 1-based
  int mover = 0;  // country id
  bool participates = false;
  bool has_vote = false;     // an incumbent vote actually took place
  std::vector<Vote> votes;   // ascending by voter id
  bool admitted = false;     // mover is a member after this stage
  int members_after = 0;
  bool operator==(const StageDecision&) const = default;
};

// v(m, t): the best welfare incumbents can still reach if the stage-t
// applicant is admitted to an FTA of size m, under rational play downstream.
template <class Scalar>
struct ContinuationTable {
  int world_size = 0;
  std::vector<Scalar> values;  // dense (n+1) x (n+1), row m, column t
  std::vector<char> filled;

  void resize(int n) {
    world_size = n;
    values.assign(static_cast<size_t>(n + 1) * (n + 1), Scalar(0));
    filled.assign(values.size(), 0);
  }
  bool defined(int m, int t) const {
    return m >= 1 && t >= 1 && m <= world_size && t <= world_size &&
           filled[static_cast<size_t>(m) * (world_size + 1) + t];
  }
  const Scalar& at(int m, int t) const {
    return values[static_cast<size_t>(m) * (world_size + 1) + t];
  }
  void set(int m, int t, const Scalar& v) {
    values[static_cast<size_t>(m) * (world_size + 1) + t] = v;
    filled[static_cast<size_t>(m) * (world_size + 1) + t] = 1;
  }
};

template <class Scalar>
struct SpeOutcome {
  FtaRegime final_regime = FtaRegime::singletons(1);
  std::vector<StageDecision> decisions;
  WelfareReport<Scalar> welfare;
  // Equilibrium FTA size under the consent rule; absent under the open rule.
  std::optional<int> equilibrium_size;
  ContinuationTable<Scalar> continuation_values;
  // Stages whose vote was decided purely by the accept-on-indifference
  // tie-break, i.e. the incumbents' welfare table has an exact tie there.
  std::vector<int> tie_stages;
};

template <class Scalar>
struct VoteDiagnostic {
  int voter = 0;
  bool accept = false;
  Scalar value_if_admitted;
  Scalar value_if_rejected;
};

template <class Scalar>
struct NodeDiagnostic {
  int stage = 0;  // 0-based position in the order
  std::uint32_t members = 0;
  int mover = 0;
  bool participates = false;
  bool admitted = false;
  Scalar participate_value;
  Scalar decline_value;
  std::vector<VoteDiagnostic<Scalar>> votes;
};

// Member welfare by final FTA size, index m = 1..n (m = 1 is the no-FTA Nash
// world). Index 0 is unused.
template <class Scalar>
std::vector<Scalar> member_welfare_table(const ModelParams<Scalar>& params) {
  std::vector<Scalar> table(params.n + 1, Scalar(0));
  for (int m = 1; m <= params.n; ++m) {
    table[m] = single_fta_welfare(params, m).member_welfare;
  }
  return table;
}

// Non-member welfare by FTA size, index m = 0..n-1; sizes 0 and 1 are both the
// Nash world.
template <class Scalar>
std::vector<Scalar> nonmember_welfare_table(const ModelParams<Scalar>& params) {
  std::vector<Scalar> table(params.n, Scalar(0));
  for (int m = 1; m < params.n; ++m) {
    table[m] = *single_fta_welfare(params, m).outsider_welfare;
  }
  table[0] = table.size() > 1 ? table[1] : single_fta_welfare(params, 1).member_welfare;
  return table;
}

// The membership count maximizing member welfare, candidates m = 2..n, ties
// resolved toward the largest size.
template <class Scalar>
int optimal_size(const ModelParams<Scalar>& params) {
  std::vector<Scalar> table = member_welfare_table(params);
  int best = 2;
  for (int m = 3; m <= params.n; ++m) {
    if (table[m] >= table[best]) best = m;
  }
  return best;
}

template <class Scalar>
Scalar continuation_value_from_table(const std::vector<Scalar>& member_table, int n, int m,
                                     int stage_t) {
  if (m < 1 || m >= n) {
    throw RangeError("continuation value needs 1 <= m < n, got m = " + std::to_string(m));
  }
  if (stage_t < m || stage_t > n) {
    throw RangeError("continuation value needs m <= stage <= n, got stage = " +
                     std::to_string(stage_t));
  }
  // Admitting the stage-t applicant makes the FTA size m+1; at most n - t
  // further applicants can follow. Sizes are clamped to the world.
  int lo = m + 1;
  int hi = std::min(m + n - stage_t + 1, n);
  Scalar best = member_table[lo];
  for (int k = lo + 1; k <= hi; ++k) {
    if (member_table[k] > best) best = member_table[k];
  }
  return best;
}

template <class Scalar>
Scalar continuation_value(const ModelParams<Scalar>& params, int m, int stage_t) {
  return continuation_value_from_table(member_welfare_table(params), params.n, m, stage_t);
}

namespace detail {

template <class Scalar>
ContinuationTable<Scalar> full_continuation_table(const std::vector<Scalar>& member_table, int n) {
  ContinuationTable<Scalar> table;
  table.resize(n);
  for (int m = 1; m < n; ++m) {
    for (int t = m; t <= n; ++t) {
      table.set(m, t, continuation_value_from_table(member_table, n, m, t));
    }
  }
  return table;
}

inline FtaRegime regime_from_members(int world_size, std::uint32_t members) {
  std::vector<int> list;
  for (int c = 0; c < world_size; ++c)
    if (members & (std::uint32_t(1) << c)) list.push_back(c);
  if (list.empty()) return FtaRegime::singletons(world_size);
  return FtaRegime::make(world_size, {list});
}

// Exhaustive solver over (stage, member set) states. Payoffs at the leaves
// come from the regime welfare of the realized member set, so the tree is an
// oracle independent of the closed-form characterization.
template <class Scalar>
class GameTreeSolver {
 public:
  GameTreeSolver(const ModelParams<Scalar>& params, AccessRule rule, const MoveOrder& order)
      : params_(params), rule_(rule), order_(order), n_(params.n) {}

  SpeOutcome<Scalar> solve(std::vector<NodeDiagnostic<Scalar>>* diagnostics) {
    build_size_tables();
    const StateEval& root = evaluate(0, 0);
    (void)root;

    SpeOutcome<Scalar> outcome;
    std::uint32_t mask = 0;
    for (int stage = 0; stage < n_; ++stage) {
      const StateEval& eval = lookup(stage, mask);
      StageDecision decision;
      decision.stage = stage + 1;
      decision.mover = order_.sequence[stage];
      decision.participates = eval.participates;
      decision.has_vote = eval.participates && eval.voted;
      if (decision.has_vote) decision.votes = eval.votes;
      decision.admitted = eval.participates && eval.admitted;
      if (decision.admitted) mask |= std::uint32_t(1) << decision.mover;
      decision.members_after = std::popcount(mask);
      if (decision.has_vote && eval.tie_vote) outcome.tie_stages.push_back(decision.stage);
      outcome.decisions.push_back(std::move(decision));
    }
    outcome.final_regime = regime_from_members(n_, mask);
    outcome.welfare = regime_welfare(params_, outcome.final_regime);
    if (rule_ == AccessRule::kWithConsent) outcome.equilibrium_size = std::popcount(mask);
    outcome.continuation_values =
        full_continuation_table<Scalar>(member_welfare_table(params_), n_);

    if (diagnostics) {
      for (const auto& [key, eval] : memo_) {
        int stage = static_cast<int>(key >> 20);
        if (stage >= n_) continue;
        NodeDiagnostic<Scalar> node;
        node.stage = stage;
        node.members = static_cast<std::uint32_t>(key & 0xFFFFF);
        node.mover = order_.sequence[stage];
        node.participates = eval.participates;
        node.admitted = eval.admitted;
        node.participate_value = eval.participate_value;
        node.decline_value = eval.decline_value;
        node.votes = eval.vote_diagnostics;
        diagnostics->push_back(std::move(node));
      }
      std::sort(diagnostics->begin(), diagnostics->end(),
                [](const NodeDiagnostic<Scalar>& a, const NodeDiagnostic<Scalar>& b) {
                  return std::tie(a.stage, a.members) < std::tie(b.stage, b.members);
                });
    }
    return outcome;
  }

 private:
  struct StateEval {
    std::vector<Scalar> value;  // continuation welfare per country
    bool participates = false;
    bool admitted = false;  // outcome of the (possibly hypothetical) application
    bool voted = false;
    bool tie_vote = false;
    std::vector<Vote> votes;
    std::vector<VoteDiagnostic<Scalar>> vote_diagnostics;
    Scalar participate_value;
    Scalar decline_value;
  };

  static std::uint64_t key_of(int stage, std::uint32_t mask) {
    return (static_cast<std::uint64_t>(stage) << 20) | mask;
  }

  const StateEval& lookup(int stage, std::uint32_t mask) const {
    return memo_.at(key_of(stage, mask));
  }

  // Countries are symmetric, so a leaf payoff depends only on membership and
  // the final FTA size. Evaluating one representative regime per size keeps
  // mathematically equal payoffs bitwise equal across member sets; the
  // tie-break rules rely on those ties being exact, in both numeric modes.
  void build_size_tables() {
    member_by_size_.assign(n_ + 1, Scalar(0));
    nonmember_by_size_.assign(n_ + 1, Scalar(0));
    Scalar nash = regime_welfare(params_, FtaRegime::singletons(n_)).total[0];
    member_by_size_[1] = nash;
    nonmember_by_size_[0] = nash;
    nonmember_by_size_[1] = nash;
    for (int m = 2; m <= n_; ++m) {
      WelfareReport<Scalar> report = regime_welfare(params_, FtaRegime::single_bloc(n_, m));
      member_by_size_[m] = report.total[0];
      if (m < n_) nonmember_by_size_[m] = report.total[n_ - 1];
    }
  }

  std::vector<Scalar> leaf_welfare(std::uint32_t mask) const {
    const int size = std::popcount(mask);
    std::vector<Scalar> out(n_);
    for (int c = 0; c < n_; ++c) {
      out[c] = (mask & (std::uint32_t(1) << c)) ? member_by_size_[size] : nonmember_by_size_[size];
    }
    return out;
  }

  const StateEval& evaluate(int stage, std::uint32_t mask) {
    std::uint64_t key = key_of(stage, mask);
    auto found = memo_.find(key);
    if (found != memo_.end()) return found->second;

    StateEval eval;
    if (stage == n_) {
      eval.value = leaf_welfare(mask);
      return memo_.emplace(key, std::move(eval)).first->second;
    }

    const int mover = order_.sequence[stage];
    const std::uint32_t joined = mask | (std::uint32_t(1) << mover);

    std::vector<Scalar> declined = evaluate(stage + 1, mask).value;
    std::vector<Scalar> after_application;
    if (mask == 0 || rule_ == AccessRule::kWithoutConsent) {
      // No incumbents to ask, or the rule strips them of the veto.
      after_application = evaluate(stage + 1, joined).value;
      eval.admitted = true;
    } else {
      std::vector<Scalar> accepted = evaluate(stage + 1, joined).value;
      eval.voted = true;
      bool unanimous = true;
      for (int c = 0; c < n_; ++c) {
        if (!(mask & (std::uint32_t(1) << c))) continue;
        bool accept = accepted[c] >= declined[c];  // indifferent incumbents accept
        eval.votes.push_back({c, accept});
        eval.vote_diagnostics.push_back({c, accept, accepted[c], declined[c]});
        unanimous = unanimous && accept;
      }
      eval.admitted = unanimous;
      // Flag votes decided by an exact tie of the welfare table: admitting the
      // applicant is worth exactly as much as freezing the FTA as it stands.
      const int incumbent = std::countr_zero(mask);
      eval.tie_vote = accepted[incumbent] == leaf_welfare(mask)[incumbent];
      after_application = eval.admitted ? std::move(accepted) : declined;
    }

    eval.participate_value = after_application[mover];
    eval.decline_value = declined[mover];
    // Indifferent applicants participate.
    eval.participates = eval.participate_value >= eval.decline_value;
    eval.value = eval.participates ? std::move(after_application) : std::move(declined);
    return memo_.emplace(key, std::move(eval)).first->second;
  }

  const ModelParams<Scalar>& params_;
  AccessRule rule_;
  const MoveOrder& order_;
  int n_;
  std::unordered_map<std::uint64_t, StateEval> memo_;
  std::vector<Scalar> member_by_size_;
  std::vector<Scalar> nonmember_by_size_;
};

}  // namespace detail

// Closed-form SPE: under consent only the first m* movers become members;
// under the open rule everyone joins regardless of the order.
template <class Scalar>
SpeOutcome<Scalar> solve_closed_form(const ModelParams<Scalar>& params, AccessRule rule,
                                     const MoveOrder& order) {
  params.validate();
  const int n = params.n;
  if (static_cast<int>(order.sequence.size()) != n) {
    throw InvalidParamsError("move order does not match the world size");
  }
  std::vector<Scalar> member_table = member_welfare_table(params);

  SpeOutcome<Scalar> outcome;
  outcome.continuation_values = detail::full_continuation_table<Scalar>(member_table, n);

  const int target = rule == AccessRule::kWithConsent ? optimal_size(params) : n;
  if (rule == AccessRule::kWithConsent) outcome.equilibrium_size = target;

  std::vector<int> members;
  for (int stage = 1; stage <= n; ++stage) {
    const int mover = order.sequence[stage - 1];
    StageDecision decision;
    decision.stage = stage;
    decision.mover = mover;
    decision.participates = true;  // applying is weakly optimal at every stage
    const int incumbents = static_cast<int>(members.size());
    if (rule == AccessRule::kWithConsent && incumbents >= 1) {
      decision.has_vote = true;
      const bool accept = incumbents < target;
      std::vector<int> voters = members;
      std::sort(voters.begin(), voters.end());
      for (int voter : voters) decision.votes.push_back({voter, accept});
      decision.admitted = accept;
      if (incumbents < n &&
          continuation_value_from_table(member_table, n, incumbents, stage) ==
              member_table[incumbents]) {
        outcome.tie_stages.push_back(stage);
      }
    } else {
      decision.admitted = true;  // unilateral formation or no-veto accession
    }
    if (decision.admitted) members.push_back(mover);
    decision.members_after = static_cast<int>(members.size());
    outcome.decisions.push_back(std::move(decision));
  }

  outcome.final_regime = members.empty() ? FtaRegime::singletons(n)
                                         : FtaRegime::make(n, {members});
  outcome.welfare = regime_welfare(params, outcome.final_regime);
  return outcome;
}

// Exhaustive backward induction over the full game tree; must reproduce the
// closed form on both rules. Guarded because states grow as 2^n.
template <class Scalar>
SpeOutcome<Scalar> backward_induction(const ModelParams<Scalar>& params, AccessRule rule,
                                      const MoveOrder& order,
                                      std::vector<NodeDiagnostic<Scalar>>* diagnostics = nullptr) {
  params.validate();
  if (params.n > 16) {
    throw TooLargeError("backward induction enumerates 2^n states; refusing n = " +
                        std::to_string(params.n) + " > 16");
  }
  if (static_cast<int>(order.sequence.size()) != params.n) {
    throw InvalidParamsError("move order does not match the world size");
  }
  detail::GameTreeSolver<Scalar> solver(params, rule, order);
  return solver.solve(diagnostics);
}

}  // namespace tradebloc

#endif  // TRADEBLOC_SEQUENTIAL_GAME_HPP
