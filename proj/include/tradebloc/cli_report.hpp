#ifndef TRADEBLOC_CLI_REPORT_HPP
#define TRADEBLOC_CLI_REPORT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tradebloc/cu_stability.hpp"
#include "tradebloc/economy.hpp"
#include "tradebloc/errors.hpp"
#include "tradebloc/fta_regime.hpp"
#include "tradebloc/numeric.hpp"
#include "tradebloc/params.hpp"
#include "tradebloc/regime_syntax.hpp"
#include "tradebloc/report.hpp"
#include "tradebloc/sequential_game.hpp"
#include "tradebloc/sigfig.hpp"
#include "tradebloc/tariff_game.hpp"

// Report builders behind the CLI subcommands. Everything here is
// deterministic: fixed column names, fixed row orders, rounding only at the
// presentation layer.

namespace tradebloc {

namespace detail {

template <class Scalar>
Cell num_cell(const Scalar& value, int sigfigs) {
  return Cell::number(format_scalar(value, sigfigs));
}

template <class Scalar>
std::vector<std::pair<std::string, Cell>> base_params(const ModelParams<Scalar>& params,
                                                      int sigfigs) {
  return {
      {"n", Cell::integer(params.n)},
      {"a", num_cell(params.a, sigfigs)},
      {"lambda", num_cell(params.lambda, sigfigs)},
      {"numeric_mode", Cell::of_text(NumericTraits<Scalar>::name)},
      {"sigfigs", Cell::integer(sigfigs)},
  };
}

inline std::string regime_string(const FtaRegime& regime) { return format_blocs(regime.blocs()); }

}  // namespace detail

template <class Scalar>
Report build_nash_report(const ModelParams<Scalar>& params, int sigfigs) {
  NashSolution<Scalar> nash = nash_closed_form(params);
  Report report;
  report.command = "nash";
  report.params = detail::base_params(params, sigfigs);
  Table table;
  table.name = "nash";
  table.columns = {"t_ne", "welfare"};
  table.rows.push_back(
      {detail::num_cell(nash.tariff, sigfigs), detail::num_cell(nash.per_country_welfare, sigfigs)});
  report.blocks.push_back(std::move(table));
  return report;
}

// One row per FTA size m: external tariffs, representative imports and the
// member / non-member welfare levels.
template <class Scalar>
Report build_sweep_report(const ModelParams<Scalar>& params, int sigfigs) {
  params.validate();
  const int n = params.n;
  Report report;
  report.command = "sweep";
  report.params = detail::base_params(params, sigfigs);
  Table table;
  table.name = "fta_size_sweep";
  table.columns = {"m", "t_p", "t_np", "m_p_p", "m_np_p", "m_p_np", "W_p", "W_np"};
  for (int m = 1; m <= n; ++m) {
    SingleFtaWelfare<Scalar> closed = single_fta_welfare(params, m);
    TradeFlows<Scalar> flows = trade_flows(
        params, equilibrium_prices(params, regime_tariffs(params, FtaRegime::single_bloc(n, m))));
    std::vector<Cell> row;
    row.push_back(Cell::integer(m));
    row.push_back(detail::num_cell(closed.tariff_on_member, sigfigs));
    row.push_back(detail::num_cell(closed.tariff_on_outsider, sigfigs));
    if (m == 1) {
      // No FTA yet: every import is the common Nash-world flow.
      Cell common = detail::num_cell(flows.imports.at(1, 0), sigfigs);
      row.push_back(common);
      row.push_back(common);
      row.push_back(common);
    } else {
      row.push_back(detail::num_cell(flows.imports.at(1, 0), sigfigs));
      row.push_back(m < n ? detail::num_cell(flows.imports.at(m, 0), sigfigs) : Cell::blank());
      row.push_back(m < n ? detail::num_cell(flows.imports.at(0, m), sigfigs) : Cell::blank());
    }
    row.push_back(detail::num_cell(closed.member_welfare, sigfigs));
    row.push_back(closed.outsider_welfare ? detail::num_cell(*closed.outsider_welfare, sigfigs)
                                          : Cell::blank());
    table.rows.push_back(std::move(row));
  }
  report.blocks.push_back(std::move(table));
  return report;
}

// Grows a second bloc alongside a fixed first bloc: rows (m1,1,...),
// (m1,2,...), ..., (m1,m2). Requires two disjoint blocs.
template <class Scalar>
Report build_two_fta_report(const ModelParams<Scalar>& params,
                            const std::vector<std::vector<int>>& partition, int sigfigs) {
  params.validate();
  const int n = params.n;
  if (partition.size() != 2) {
    throw InvalidRegimeError("two-fta needs exactly two blocs, e.g. 1-5|6-8");
  }
  std::vector<int> first = partition[0];
  std::vector<int> second = partition[1];
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  for (int c : second) {
    if (std::binary_search(first.begin(), first.end(), c)) {
      throw InvalidRegimeError("two-fta blocs must be disjoint");
    }
  }
  Report report;
  report.command = "two-fta";
  report.params = detail::base_params(params, sigfigs);
  report.params.push_back({"partition", Cell::of_text(format_blocs({first, second}))});
  Table table;
  table.name = "two_fta";
  table.columns = {"regime", "t_alpha", "t_beta", "t_gamma", "W_alpha", "W_beta", "W_gamma"};
  const int m1 = static_cast<int>(first.size());
  for (int k = 1; k <= static_cast<int>(second.size()); ++k) {
    std::vector<int> grown(second.begin(), second.begin() + k);
    FtaRegime regime = FtaRegime::make(n, {first, grown});
    WelfareReport<Scalar> wf = regime_welfare(params, regime);
    const int singleton_count = n - m1 - k;
    int singleton = -1;
    for (int c = 0; c < n && singleton < 0; ++c) {
      if (!std::binary_search(first.begin(), first.end(), c) &&
          !std::binary_search(grown.begin(), grown.end(), c))
        singleton = c;
    }
    std::string label = "(" + std::to_string(m1) + "," + std::to_string(k);
    for (int s = 0; s < singleton_count; ++s) label += ",1";
    label += ")";
    std::vector<Cell> row;
    row.push_back(Cell::of_text(label));
    row.push_back(detail::num_cell(external_tariff(params, n - m1), sigfigs));
    row.push_back(detail::num_cell(external_tariff(params, n - k), sigfigs));
    row.push_back(singleton_count > 0 ? detail::num_cell(external_tariff(params, n - 1), sigfigs)
                                      : Cell::blank());
    row.push_back(detail::num_cell(wf.total[first[0]], sigfigs));
    row.push_back(detail::num_cell(wf.total[second[0]], sigfigs));
    row.push_back(singleton_count > 0 ? detail::num_cell(wf.total[singleton], sigfigs)
                                      : Cell::blank());
    table.rows.push_back(std::move(row));
  }
  report.blocks.push_back(std::move(table));
  return report;
}

// (m, W_p, W_np) series for external plotting, argmax row marked.
template <class Scalar>
Report build_figure_report(const ModelParams<Scalar>& params, int sigfigs) {
  params.validate();
  Report report;
  report.command = "figure";
  report.params = detail::base_params(params, sigfigs);
  const int best = optimal_size(params);
  Table table;
  table.name = "member_vs_outsider_welfare";
  table.columns = {"m", "W_p", "W_np", "argmax"};
  for (int m = 1; m <= params.n; ++m) {
    SingleFtaWelfare<Scalar> closed = single_fta_welfare(params, m);
    table.rows.push_back({Cell::integer(m), detail::num_cell(closed.member_welfare, sigfigs),
                          closed.outsider_welfare
                              ? detail::num_cell(*closed.outsider_welfare, sigfigs)
                              : Cell::blank(),
                          Cell::integer(m == best ? 1 : 0)});
  }
  report.blocks.push_back(std::move(table));
  return report;
}

template <class Scalar>
Report build_regime_report(const ModelParams<Scalar>& params, const FtaRegime& regime,
                           int sigfigs) {
  OutsiderIndex index = outsider_sets(params, regime);
  TariffProfile<Scalar> tariffs = regime_tariffs(params, regime);
  WelfareReport<Scalar> wf = welfare(params, tariffs);
  Report report;
  report.command = "regime";
  report.params = detail::base_params(params, sigfigs);
  report.params.push_back({"regime", Cell::of_text(detail::regime_string(regime))});

  Table countries;
  countries.name = "countries";
  countries.columns = {"country", "n_k", "external_tariff", "welfare"};
  for (int k = 0; k < params.n; ++k) {
    countries.rows.push_back({Cell::integer(k + 1), Cell::integer(index.counts[k]),
                              index.counts[k] > 0
                                  ? detail::num_cell(external_tariff(params, index.counts[k]), sigfigs)
                                  : Cell::blank(),
                              detail::num_cell(wf.total[k], sigfigs)});
  }
  report.blocks.push_back(std::move(countries));

  Table matrix;
  matrix.name = "tariffs";
  matrix.columns = {"country"};
  for (int j = 0; j < params.n; ++j) matrix.columns.push_back(std::to_string(j + 1));
  for (int i = 0; i < params.n; ++i) {
    std::vector<Cell> row{Cell::integer(i + 1)};
    for (int j = 0; j < params.n; ++j) row.push_back(detail::num_cell(tariffs.at(i, j), sigfigs));
    matrix.rows.push_back(std::move(row));
  }
  report.blocks.push_back(std::move(matrix));
  return report;
}

template <class Scalar>
Report build_cu_report(const ModelParams<Scalar>& params, const CuRegime& regime, int sigfigs) {
  TariffProfile<Scalar> tariffs = cu_tariffs(params, regime);
  WelfareReport<Scalar> wf = welfare(params, tariffs);
  Report report;
  report.command = "cu";
  report.params = detail::base_params(params, sigfigs);
  report.params.push_back({"partition", Cell::of_text(format_blocs(regime.unions()))});

  Table countries;
  countries.name = "countries";
  countries.columns = {"country", "union", "welfare"};
  for (int c = 0; c < params.n; ++c) {
    countries.rows.push_back({Cell::integer(c + 1), Cell::integer(regime.union_of(c) + 1),
                              detail::num_cell(wf.total[c], sigfigs)});
  }
  report.blocks.push_back(std::move(countries));

  Table matrix;
  matrix.name = "tariffs";
  matrix.columns = {"country"};
  for (int j = 0; j < params.n; ++j) matrix.columns.push_back(std::to_string(j + 1));
  for (int i = 0; i < params.n; ++i) {
    std::vector<Cell> row{Cell::integer(i + 1)};
    for (int j = 0; j < params.n; ++j) row.push_back(detail::num_cell(tariffs.at(i, j), sigfigs));
    matrix.rows.push_back(std::move(row));
  }
  report.blocks.push_back(std::move(matrix));
  return report;
}

namespace detail {

inline std::string votes_string(const StageDecision& decision) {
  std::string out;
  for (const Vote& vote : decision.votes) out += vote.accept ? 'A' : 'R';
  return out;
}

inline std::string tie_stages_string(const std::vector<int>& stages) {
  std::string out;
  for (size_t i = 0; i < stages.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(stages[i]);
  }
  return out;
}

}  // namespace detail

// Solves the sequential game. The closed form is always computed; for worlds
// small enough to enumerate, the exhaustive tree solve runs as well and any
// disagreement is raised as a model-invariant violation.
template <class Scalar>
Report build_spe_report(const ModelParams<Scalar>& params, AccessRule rule, const MoveOrder& order,
                        int sigfigs) {
  SpeOutcome<Scalar> outcome = solve_closed_form(params, rule, order);
  if (params.n <= 16) {
    SpeOutcome<Scalar> tree = backward_induction(params, rule, order);
    const bool agree = tree.final_regime == outcome.final_regime &&
                       tree.decisions == outcome.decisions &&
                       tree.equilibrium_size == outcome.equilibrium_size &&
                       tree.tie_stages == outcome.tie_stages;
    if (!agree) {
      throw ModelError(
          "backward induction disagrees with the closed-form equilibrium; "
          "model invariant violated");
    }
  }

  Report report;
  report.command = "spe";
  report.params = detail::base_params(params, sigfigs);
  report.params.push_back({"rule", Cell::of_text(access_rule_name(rule))});
  report.params.push_back({"order", Cell::of_text(format_move_order(order))});

  Table summary;
  summary.name = "summary";
  summary.columns = {"rule", "order", "final_regime", "m_star", "tie_stages"};
  summary.rows.push_back(
      {Cell::of_text(access_rule_name(rule)), Cell::of_text(format_move_order(order)),
       Cell::of_text(detail::regime_string(outcome.final_regime)),
       outcome.equilibrium_size ? Cell::integer(*outcome.equilibrium_size) : Cell::blank(),
       outcome.tie_stages.empty() ? Cell::blank()
                                  : Cell::of_text(detail::tie_stages_string(outcome.tie_stages))});
  report.blocks.push_back(std::move(summary));

  Table decisions;
  decisions.name = "decisions";
  decisions.columns = {"stage", "mover", "participates", "admitted", "votes", "members_after"};
  for (const StageDecision& d : outcome.decisions) {
    decisions.rows.push_back({Cell::integer(d.stage), Cell::integer(d.mover + 1),
                              Cell::yes_no(d.participates), Cell::yes_no(d.admitted),
                              d.has_vote ? Cell::of_text(detail::votes_string(d))
                                         : Cell::blank(),
                              Cell::integer(d.members_after)});
  }
  report.blocks.push_back(std::move(decisions));

  Table welfare_block;
  welfare_block.name = "welfare";
  welfare_block.columns = {"country", "member", "welfare"};
  for (int c = 0; c < params.n; ++c) {
    bool member = !outcome.final_regime.blocs().empty() &&
                  std::binary_search(outcome.final_regime.blocs()[0].begin(),
                                     outcome.final_regime.blocs()[0].end(), c) &&
                  outcome.final_regime.blocs()[0].size() > 1;
    welfare_block.rows.push_back({Cell::integer(c + 1), Cell::yes_no(member),
                                  detail::num_cell(outcome.welfare.total[c], sigfigs)});
  }
  report.blocks.push_back(std::move(welfare_block));
  return report;
}

template <class Scalar>
Report build_stability_report(const ModelParams<Scalar>& params, const FtaRegime& regime,
                              int sigfigs) {
  StabilityVerdict<Scalar> verdict = pairwise_stability(params, regime);
  Report report;
  report.command = "stability";
  report.params = detail::base_params(params, sigfigs);
  report.params.push_back({"regime", Cell::of_text(detail::regime_string(regime))});

  Table summary;
  summary.name = "summary";
  summary.columns = {"pairwise_stable", "network", "decomposed_blocs"};
  summary.rows.push_back({Cell::yes_no(verdict.pairwise_stable),
                          Cell::of_text(detail::regime_string(verdict.network)),
                          Cell::yes_no(verdict.decomposed_blocs)});
  report.blocks.push_back(std::move(summary));

  Table severance;
  severance.name = "severance_violations";
  severance.columns = {"cutter", "partner", "welfare_before", "welfare_after"};
  for (const auto& v : verdict.severance_violations) {
    severance.rows.push_back({Cell::integer(v.cutter + 1), Cell::integer(v.partner + 1),
                              detail::num_cell(v.welfare_before, sigfigs),
                              detail::num_cell(v.welfare_after, sigfigs)});
  }
  report.blocks.push_back(std::move(severance));

  Table additions;
  additions.name = "link_violations";
  additions.columns = {"country_a", "country_b", "a_before", "a_after", "b_before", "b_after"};
  for (const auto& v : verdict.link_violations) {
    additions.rows.push_back({Cell::integer(v.first + 1), Cell::integer(v.second + 1),
                              detail::num_cell(v.first_before, sigfigs),
                              detail::num_cell(v.first_after, sigfigs),
                              detail::num_cell(v.second_before, sigfigs),
                              detail::num_cell(v.second_after, sigfigs)});
  }
  report.blocks.push_back(std::move(additions));
  return report;
}

}  // namespace tradebloc

#endif  // TRADEBLOC_CLI_REPORT_HPP
