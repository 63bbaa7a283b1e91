#include <iostream>

#include <CLI11.hpp>

#include "corona/cli.hpp"

using namespace corona::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and certifier for corona-type ideal problems in subalgebras of H-infinity"};
  app.require_subcommand(1);

  CheckKOptions ck;
  auto* check_k = app.add_subcommand("check-k", "Decide whether H_K is an algebra");
  check_k->add_option("--set", ck.set, "Finite K as a comma list, e.g. 1,2,5");
  check_k->add_option("--complement-generators", ck.complement_generators, "Generators of the complement, e.g. 4,6");
  check_k->add_option("--out", ck.out, "Write a JSON report here");

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Solve and certify an instance file");
  solve->add_option("instance", so.instance_file, "Instance JSON file")->required();
  solve->add_option("--mode", so.mode, "treil, wolff3 or radical (default: the file's mode, else treil)");
  solve->add_option("--out", so.out, "Write the report here and print a summary");
  solve->add_option("--grid-points", so.grid_points, "Points per grid circle");
  solve->add_option("--seed", so.seed, "Seed recorded in the report");

  KoszulOptions ko;
  auto* koszul = app.add_subcommand("koszul", "Koszul operator checks");
  koszul->require_subcommand(1);
  auto* kverify = koszul->add_subcommand("verify", "Range/kernel and rank-one identities on random vectors");
  kverify->add_option("--dim", ko.dim, "Dimension n, 2..8");
  kverify->add_option("--trials", ko.trials, "Number of random (A, B) pairs");
  kverify->add_option("--seed", ko.seed, "RNG seed");

  std::string report;
  auto* verify = app.add_subcommand("verify", "Recompute a stored report's certificate");
  verify->add_option("report", report, "Report JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*check_k) return cmd_check_k(ck, std::cout, std::cerr);
  if (*solve) return cmd_solve(so, std::cout, std::cerr);
  if (*kverify) return cmd_koszul_verify(ko, std::cout, std::cerr);
  return cmd_verify(report, std::cout, std::cerr);
}
