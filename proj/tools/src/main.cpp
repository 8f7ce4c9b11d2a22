#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bicanon/tools/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bicanon: exact checks for bicanonical maps of surfaces with p_g = 0"};
  app.require_subcommand(1);

  std::string target;
  bool json = false;
  bool verbose = false;
  auto* run = app.add_subcommand("run", "Run a scenario file or a bundled scenario");
  run->add_option("scenario", target, "Path to a scenario file, or a builtin name")->required();
  run->add_flag("--json", json, "Print the report as JSON");
  run->add_flag("-v,--verbose", verbose, "Include validation checks, removal steps and zero rows");

  app.add_subcommand("list-builtin", "List the bundled scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const auto outcome = run->parsed() ? bicanon::tools::execute(target, json, verbose) : bicanon::tools::list_builtin();
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
