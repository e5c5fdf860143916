#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tradebloc/cli_report.hpp"

namespace {

struct CliOptions {
  int n = 8;
  std::string a = "12";
  std::string lambda = "36";
  std::string format = "csv";
  int sigfigs = 6;
  bool exact = false;
  bool allow_n2 = false;
  std::string rule = "consent";
  std::string order = "identity";
  std::string regime = "";
  std::string partition = "";
};

enum class Command { kNash, kSweep, kTwoFta, kFigure, kRegime, kCu, kSpe, kStability };

template <class Scalar>
int run_command(Command command, const CliOptions& options) {
  tradebloc::ModelParams<Scalar> params;
  params.n = options.n;
  params.a = tradebloc::parse_scalar<Scalar>(options.a);
  params.lambda = tradebloc::parse_scalar<Scalar>(options.lambda);
  params.allow_two_country_world = options.allow_n2;
  params.validate();
  if (params.n == 2) {
    std::cerr << "tradebloc: warning: two-country world; the sequential-game guarantees "
                 "assume at least 3 countries\n";
  }

  tradebloc::Report report;
  switch (command) {
    case Command::kNash:
      report = tradebloc::build_nash_report(params, options.sigfigs);
      break;
    case Command::kSweep:
      report = tradebloc::build_sweep_report(params, options.sigfigs);
      break;
    case Command::kTwoFta: {
      std::string partition = options.partition;
      if (partition.empty()) {
        if (params.n != 8) {
          throw tradebloc::SyntaxError("--partition is required when n != 8", 1);
        }
        partition = "1-5|6-8";
      }
      report = tradebloc::build_two_fta_report(
          params, tradebloc::parse_bloc_list(partition, params.n), options.sigfigs);
      break;
    }
    case Command::kFigure:
      report = tradebloc::build_figure_report(params, options.sigfigs);
      break;
    case Command::kRegime: {
      tradebloc::FtaRegime regime =
          options.regime.empty()
              ? tradebloc::FtaRegime::singletons(params.n)
              : tradebloc::FtaRegime::make(params.n,
                                           tradebloc::parse_bloc_list(options.regime, params.n));
      report = tradebloc::build_regime_report(params, regime, options.sigfigs);
      break;
    }
    case Command::kCu: {
      tradebloc::CuRegime regime =
          options.partition.empty()
              ? tradebloc::CuRegime::singletons(params.n)
              : tradebloc::CuRegime::make(params.n,
                                          tradebloc::parse_bloc_list(options.partition, params.n));
      report = tradebloc::build_cu_report(params, regime, options.sigfigs);
      break;
    }
    case Command::kSpe: {
      tradebloc::AccessRule rule = options.rule == "open"
                                       ? tradebloc::AccessRule::kWithoutConsent
                                       : tradebloc::AccessRule::kWithConsent;
      tradebloc::MoveOrder order = tradebloc::parse_move_order(options.order, params.n);
      report = tradebloc::build_spe_report(params, rule, order, options.sigfigs);
      break;
    }
    case Command::kStability: {
      tradebloc::FtaRegime regime =
          options.regime.empty()
              ? tradebloc::FtaRegime::singletons(params.n)
              : tradebloc::FtaRegime::make(params.n,
                                           tradebloc::parse_bloc_list(options.regime, params.n));
      report = tradebloc::build_stability_report(params, regime, options.sigfigs);
      break;
    }
  }
  std::cout << (options.format == "json" ? tradebloc::render_json(report)
                                         : tradebloc::render_csv(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions options;
  CLI::App app{"Competing-importers trade model: equilibrium tariffs, welfare and the "
               "sequential FTA formation game"};
  app.require_subcommand(1);
  app.add_option("--n", options.n, "number of countries")->capture_default_str();
  app.add_option("--a", options.a, "demand intercept (integer, decimal or p/q)")
      ->capture_default_str();
  app.add_option("--lambda", options.lambda, "comparative-advantage degree")
      ->capture_default_str();
  app.add_option("--format", options.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--sigfigs", options.sigfigs, "significant figures in output (>= 3)")
      ->check(CLI::Range(3, 17))
      ->capture_default_str();
  app.add_flag("--exact", options.exact, "compute in exact rational arithmetic");
  app.add_flag("--allow-n2", options.allow_n2, "permit a two-country world");

  CLI::App* nash = app.add_subcommand("nash", "Nash equilibrium of the tariff game");
  CLI::App* sweep = app.add_subcommand("sweep", "tariffs, trade and welfare across FTA sizes");
  CLI::App* two_fta = app.add_subcommand("two-fta", "a second FTA growing beside a first one");
  two_fta->add_option("--partition", options.partition, "two disjoint blocs, e.g. 1-5|6-8");
  CLI::App* figure = app.add_subcommand("figure", "member vs non-member welfare series");
  CLI::App* regime = app.add_subcommand("regime", "equilibrium of an arbitrary FTA regime");
  regime->add_option("--regime", options.regime, "blocs, e.g. 1-5|6|7|8");
  CLI::App* cu = app.add_subcommand("cu", "customs-union equilibrium of a disjoint partition");
  cu->add_option("--partition", options.partition, "disjoint unions, e.g. 1-5|6|7|8");
  CLI::App* spe = app.add_subcommand("spe", "subgame perfect equilibrium of the formation game");
  spe->add_option("--rule", options.rule, "access rule")
      ->check(CLI::IsMember({"consent", "open"}))
      ->capture_default_str();
  spe->add_option("--order", options.order, "identity, reverse, or a comma list like 3,1,2")
      ->capture_default_str();
  CLI::App* stability = app.add_subcommand("stability", "pairwise stability of an FTA network");
  stability->add_option("--regime", options.regime, "network blocs, e.g. 1-5|6-8");
  for (CLI::App* sub : {nash, sweep, two_fta, figure, regime, cu, spe, stability}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Command command = Command::kNash;
  if (app.got_subcommand(sweep)) command = Command::kSweep;
  if (app.got_subcommand(two_fta)) command = Command::kTwoFta;
  if (app.got_subcommand(figure)) command = Command::kFigure;
  if (app.got_subcommand(regime)) command = Command::kRegime;
  if (app.got_subcommand(cu)) command = Command::kCu;
  if (app.got_subcommand(spe)) command = Command::kSpe;
  if (app.got_subcommand(stability)) command = Command::kStability;

  try {
    return options.exact ? run_command<tradebloc::Rational>(command, options)
                         : run_command<double>(command, options);
  } catch (const tradebloc::SyntaxError& e) {
    std::cerr << "tradebloc: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tradebloc: " << e.what() << "\n";
    return 1;
  } catch (const tradebloc::InvalidParamsError& e) {
    // Bad parameter values are usage errors, not model findings.
    std::cerr << "tradebloc: " << e.what() << "\n";
    return 1;
  } catch (const tradebloc::ModelError& e) {
    std::cerr << "tradebloc: " << e.what() << "\n";
    return 2;
  }
}
