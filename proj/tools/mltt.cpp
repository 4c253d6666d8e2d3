#include <iostream>

#include "CLI11.hpp"
#include "mltt/corpus.hpp"
#include "mltt/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mltt: a small checker for Martin-Lof type theory with universe levels"};
  app.require_subcommand(1);

  mltt::RunConfig config;
  std::string file;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--safe", config.safe_mode, "Reject assumptions");
    cmd->add_option("--max-depth", config.depth_budget, "Eliminator step budget")->check(CLI::PositiveNumber);
    cmd->add_option("--prelude", config.preludes, "File checked before the inputs (repeatable)")
        ->check(CLI::ExistingFile);
  };

  auto* check = app.add_subcommand("check", "Type-check files");
  add_common(check);
  check->add_option("files", config.paths, "Source files")->required()->check(CLI::ExistingFile);

  auto* eval = app.add_subcommand("eval", "Normalize a term in the scope of a file");
  add_common(eval);
  eval->add_option("file", file, "Source file")->required()->check(CLI::ExistingFile);
  eval->add_option("term", config.term_text, "Term to normalize")->required();

  auto* type_of = app.add_subcommand("type", "Print the normal form of a term's type");
  add_common(type_of);
  type_of->add_option("file", file, "Source file")->required()->check(CLI::ExistingFile);
  type_of->add_option("term", config.term_text, "Term")->required();

  std::string manifest;
  std::string tier;
  auto* corpus = app.add_subcommand("corpus", "Run a corpus manifest against its golden outcomes");
  corpus->add_option("manifest", manifest, "Manifest file")->required()->check(CLI::ExistingFile);
  corpus->add_option("--tier", tier, "Only entries of this tier (tier1, tier2, tier3 or neg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (corpus->parsed()) {
    try {
      auto report = mltt::run_corpus(mltt::load_manifest(manifest), tier);
      if (report.rows.empty()) {
        std::cerr << "usage error: no manifest entries" << (tier.empty() ? "" : " in tier '" + tier + "'") << '\n';
        return 2;
      }
      std::cout << report.text;
      return report.all_passed() ? 0 : 1;
    } catch (const std::exception& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return 2;
    }
  }
  if (eval->parsed()) {
    config.command = mltt::RunConfig::Command::Eval;
    config.paths = {file};
  } else if (type_of->parsed()) {
    config.command = mltt::RunConfig::Command::TypeOf;
    config.paths = {file};
  }
  mltt::RunResult r = mltt::run(config);
  (r.exit_code == 2 ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}
