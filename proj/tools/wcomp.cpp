// wcomp: batch front end for weighted composition operators on P_alpha.

#include <iostream>

#include <CLI11.hpp>

#include "wcomp/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Weighted composition operators preserving the subordination class P_alpha"};
  app.require_subcommand(1);

  std::string grid_text;
  const auto grid_from = [&grid_text]() -> std::optional<wcomp::GridSpec> {
    if (grid_text.empty()) return std::nullopt;
    return wcomp::parse_grid_flag(grid_text);
  };

  wcomp::CheckOptions check;
  double check_tol = 0.0;
  auto* check_cmd = app.add_subcommand("check", "Scan the preservation criterion over the disk");
  check_cmd->add_option("spec", check.spec_path, "Symbol spec (JSON)")->required();
  check_cmd->add_option("--out", check.out_path, "Write the report here instead of stdout");
  check_cmd->add_option("--dump-margins", check.dump_margins_path, "Write r,theta,margin CSV");
  auto* tol_opt = check_cmd->add_option("--tol", check_tol, "Tie tolerance on the margin");
  check_cmd->add_option("--grid", grid_text, "Grid as R,A,K (radial, angular, boundary_k_max)");

  wcomp::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify-examples", "Run the built-in reproduction battery");
  verify_cmd->add_option("--seed", verify.seed, "Seed for random draws");
  verify_cmd->add_option("--only", verify.only, "Run only these claim ids");
  verify_cmd->add_option("--out", verify.out_path, "Also write a JSON report here");

  wcomp::IterateOptions iterate;
  auto* iterate_cmd = app.add_subcommand("iterate", "Iterate the operator to its fixed point");
  iterate_cmd->add_option("spec", iterate.spec_path, "Symbol spec (JSON)")->required();
  iterate_cmd->add_option("--out", iterate.out_path, "Write the trace here instead of stdout");
  iterate_cmd->add_option("--deg", iterate.deg, "Truncation degree")->check(CLI::NonNegativeNumber);
  iterate_cmd->add_option("--tol", iterate.tol, "Stop when the max coefficient change drops below this");
  iterate_cmd->add_option("--max-iter", iterate.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
  iterate_cmd->add_option("--start", iterate.start, "h_alpha, one, or extreme:<theta>");
  iterate_cmd->add_option("--second-start", iterate.second_start, "Rerun from this start and compare limits");

  wcomp::ClassifyOptions classify;
  auto* classify_cmd = app.add_subcommand("classify", "Probe radial limits of the symbols");
  classify_cmd->add_option("spec", classify.spec_path, "Symbol spec (JSON)")->required();
  classify_cmd->add_option("--out", classify.out_path, "Write the report here instead of stdout");
  classify_cmd->add_option("--tol", classify.fraction_tol, "Fraction of angles allowed to disagree");
  classify_cmd->add_option("--grid", grid_text, "Grid as R,A,K (radial, angular, boundary_k_max)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wcomp::kExitUsage;
  }

  try {
    if (*check_cmd) {
      if (*tol_opt) check.tol = check_tol;
      check.grid = grid_from();
      return wcomp::cmd_check(check, std::cout, std::cerr);
    }
    if (*verify_cmd) return wcomp::cmd_verify_examples(verify, std::cout, std::cerr);
    if (*iterate_cmd) return wcomp::cmd_iterate(iterate, std::cout, std::cerr);
    classify.grid = grid_from();
    return wcomp::cmd_classify(classify, std::cout, std::cerr);
  } catch (const wcomp::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return wcomp::kExitUsage;
  }
}
