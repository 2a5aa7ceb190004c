#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "cohomo/cli/commands.hpp"

using namespace cohomo::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of finite groups, and the quadric surface verification"};
  app.require_subcommand(1);

  ComputeOptions co;
  auto* compute_cmd = app.add_subcommand("compute", "Compute H^n(G, M)");
  compute_cmd->add_option("--group", co.group_file, "File with a [group] section");
  compute_cmd->add_option("--module", co.module_file, "File with a [module] section")->required();
  compute_cmd->add_option("--module-name", co.module_name, "Which [module NAME] to use");
  compute_cmd->add_option("--degree", co.degree, "Cohomological degree")->required();
  compute_cmd->add_flag("--show-generators", co.show_generators, "Print a cocycle for each generator");

  CheckOptions ko;
  auto* check_cmd = app.add_subcommand("check-cocycle", "Check whether a cochain is a cocycle and a coboundary");
  check_cmd->add_option("--cochain", ko.cochain_file, "File with a [cochain] section")->required();
  check_cmd->add_flag("--witness", ko.witness, "Print a cochain whose coboundary is the input");

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the quadric surface verification");
  verify_cmd->add_option("--step", vo.step, "picard, 1, 2, 3, 4 or all")->capture_default_str();
  verify_cmd->add_option("--format", vo.format, "text or machine")->capture_default_str();
  verify_cmd->add_option("--debug-mutate", vo.mutations, "Override a table entry, e.g. Phi(t,t,s)=1")
      ->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_input_error;
  }

  Outcome r;
  if (*compute_cmd) r = compute(co);
  else if (*check_cmd) r = check_cocycle(ko);
  else r = verify_paper(vo);

  std::fwrite(r.out.data(), 1, r.out.size(), stdout);
  std::fwrite(r.err.data(), 1, r.err.size(), stderr);
  return r.code;
}
