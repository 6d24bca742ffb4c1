#include <iostream>

#include <CLI11.hpp>

#include "arw/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = arw::cli;
  CLI::App app{"Alicki-van Ryn quantumness witnesses for product states"};
  app.require_subcommand(1);

  auto* demo = app.add_subcommand("demo", "Check the built-in two-qubit pair on |00>");

  cli::VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Check the four AR conditions for a pair and a state");
  verify->add_option("--pair", verify_opt.pair, "Pair JSON file or built-in id")->capture_default_str();
  verify->add_option("--state", verify_opt.state_path, "State JSON (amplitudes) or density-matrix JSON; default |0...0>");
  verify->add_option("--tol", verify_opt.tol, "PSD tolerance on lambda_min")->capture_default_str();

  cli::EnlargeOptions enlarge_opt;
  auto* enlarge = app.add_subcommand("enlarge", "Embed 2x2 pairs into 2^n dimensions");
  enlarge->add_option("--n", enlarge_opt.n, "Qubit count")->capture_default_str();
  enlarge->add_option("--ground", enlarge_opt.ground, "Ground pair (file or id)")->capture_default_str();
  enlarge->add_option("--filler", enlarge_opt.filler, "Filler pair (file or id)")->capture_default_str();
  enlarge->add_option("--plan", enlarge_opt.plan_path, "Plan JSON; overrides --n/--ground/--filler");
  enlarge->add_option("--out", enlarge_opt.out_path, "Write the embedded pair JSON here");

  cli::PauliOptions pauli_opt;
  auto* pauli = app.add_subcommand("pauli", "Pauli decomposition of a Hermitian matrix");
  pauli->add_option("matrix", pauli_opt.matrix_path, "Matrix JSON file");
  pauli->add_option("--pair", pauli_opt.pair, "Decompose B^2-A^2 of this pair (file or id) instead");

  cli::ThermalOptions thermal_opt;
  auto* thermal = app.add_subcommand("thermal", "Gibbs-state temperature sweep of H = B^2-A^2");
  thermal->add_option("--pair", thermal_opt.pair, "Pair JSON file or built-in id")->capture_default_str();
  thermal->add_option("--tmin", thermal_opt.tmin)->capture_default_str();
  thermal->add_option("--tmax", thermal_opt.tmax)->capture_default_str();
  thermal->add_option("--points", thermal_opt.points)->capture_default_str();
  thermal->add_flag("--log", thermal_opt.log_spacing, "Geometric temperature spacing");
  thermal->add_option("--out", thermal_opt.out_csv, "CSV output path; CSV goes to stdout when omitted");

  cli::SearchOptions search_opt;
  auto& cfg = search_opt.config;
  auto* search = app.add_subcommand("search", "Search for maximally violating witness pairs");
  search->add_option("--dim", cfg.dim)->capture_default_str();
  search->add_option("--restarts", cfg.restarts)->capture_default_str();
  search->add_option("--seed", cfg.seed)->capture_default_str();
  search->add_option("--normalization", search_opt.normalization, "spectra02 | traceA2 | none")
      ->capture_default_str();
  search->add_flag("--require-diagonal-w", cfg.require_diagonal_W, "Penalize off-diagonal entries of B^2-A^2");
  search->add_option("--max-iter", cfg.max_iterations_per_restart, "Simplex iterations per restart")
      ->capture_default_str();
  search->add_option("--penalty", cfg.penalty_weight, "Penalty weight")->capture_default_str();
  search->add_option("--out", search_opt.out_path, "Write the search report JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  if (*demo) return cli::cmd_demo(std::cout, std::cerr);
  if (*verify) return cli::cmd_verify(verify_opt, std::cout, std::cerr);
  if (*enlarge) return cli::cmd_enlarge(enlarge_opt, std::cout, std::cerr);
  if (*pauli) return cli::cmd_pauli(pauli_opt, std::cout, std::cerr);
  if (*thermal) return cli::cmd_thermal(thermal_opt, std::cout, std::cerr);
  if (*search) return cli::cmd_search(search_opt, std::cout, std::cerr);
  return cli::kUsage;
}
