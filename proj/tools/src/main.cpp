#include <iostream>

#include <CLI11.hpp>

#include "fhollow_tools/commands.hpp"

using namespace fhollow::tools;

int main(int argc, char** argv) {
  CLI::App app{"Fine interiors of lattice polytopes and their dilations"};
  app.require_subcommand(1);

  FineArgs fine;
  auto* fine_cmd = app.add_subcommand("fine", "Print the vertices of F(lambda P)");
  fine_cmd->add_option("file", fine.path, "Polytope file")->required();
  fine_cmd->add_option("--dilation", fine.dilation, "Dilation factor p/q");
  fine_cmd->add_option("--brute", fine.brute, "Use the brute-force oracle with this norm bound");

  std::string multipliers_path;
  auto* mult_cmd = app.add_subcommand("multipliers", "Print the special multipliers");
  mult_cmd->add_option("file", multipliers_path, "Polytope file")->required();

  ClassifyArgs classify;
  classify.jobs = default_jobs();
  auto* cls_cmd = app.add_subcommand("classify", "Run a classification pipeline");
  cls_cmd->add_option("target", classify.target, "polygons, weakly-sporadic or sporadic")
      ->required()
      ->check(CLI::IsMember({"polygons", "weakly-sporadic", "sporadic"}));
  cls_cmd->add_option("--out", classify.out_path, "JSONL output file");
  cls_cmd->add_option("--jobs", classify.jobs, "Worker threads (default: FHOLLOW_JOBS or 1)");
  cls_cmd->add_flag("--resume", classify.resume, "Continue from the enumeration logs next to --out");
  cls_cmd->add_flag("--check", classify.check, "Exit with status 4 unless the expected counts appear");

  VerifyArgs verify;
  bool corpus = false;
  auto* ver_cmd = app.add_subcommand("verify", "Run the property checks");
  ver_cmd->add_option("file", verify.path, "Polytope file");
  ver_cmd->add_flag("--corpus", corpus, "Use the built-in named corpus");
  ver_cmd->add_option("--bound", verify.bound, "Norm bound for the brute-force oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kParseError;
  }

  if (*fine_cmd) return cmd_fine(fine, std::cout, std::cerr);
  if (*mult_cmd) return cmd_multipliers(multipliers_path, std::cout, std::cerr);
  if (*cls_cmd) return cmd_classify(classify, std::cout, std::cerr);
  if (corpus) verify.path.reset();
  return cmd_verify(verify, std::cout, std::cerr);
}
