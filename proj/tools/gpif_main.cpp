#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gpif/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"gpif - generalized prime ideal factorization calculator"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a session file ('-' for stdin)");
  std::string file;
  gpif::RunOptions opts;
  std::string tie = "canonical";
  run->add_option("file", file, "session file")->required();
  run->add_flag("--json", opts.json, "emit one JSON object per command");
  run->add_flag("--oracle", opts.oracle, "cross-check finite Z-modules against the brute-force oracle");
  run->add_option("--seed", opts.seed, "seed for the random tie-break mode");
  run->add_option("--tie-break", tie, "canonical|random maximal-prime tie-break")
      ->check(CLI::IsMember({"canonical", "random"}));

  CLI11_PARSE(app, argc, argv);

  opts.tie = (tie == "random") ? gpif::TieBreak::Random : gpif::TieBreak::Canonical;
  if (const char* bound = std::getenv("GPIF_ORACLE_BOUND")) opts.oracle_bound = std::atoi(bound);

  std::string text;
  if (file == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot open '" << file << "'\n";
      return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  try {
    gpif::Session session = gpif::parse_session(text);
    return gpif::run_session(session, opts, std::cout);
  } catch (const gpif::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
