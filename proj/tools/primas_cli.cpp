#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "primas/error.hpp"
#include "primas/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"primas: primary decomposition and associated-prime calculator"};

  std::string script_path;
  std::optional<std::string> config_path;
  std::optional<std::string> format;
  std::optional<long> seed;
  std::optional<long> budget;
  app.add_option("script", script_path, "script file to execute ('-' or empty: stdin)");
  app.add_option("--config", config_path, "config file (JSON); overrides PRIMAS_CONFIG");
  app.add_option("--format", format, "output format: text | json");
  app.add_option("--seed", seed, "seed for randomized searches");
  app.add_option("--budget", budget, "pair/step budget for basis computations");

  CLI11_PARSE(app, argc, argv);

  primas::Config cfg;
  try {
    cfg = primas::Config::load(config_path);
  } catch (const primas::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  if (format) cfg.format = *format;
  if (seed) cfg.seed = static_cast<std::uint64_t>(*seed);
  if (budget) cfg.pair_budget = *budget;
  if (cfg.format != "text" && cfg.format != "json") {
    std::cerr << "error: format must be text or json\n";
    return 2;
  }

  primas::Session session(cfg, std::cout);
  if (script_path.empty() || script_path == "-") return session.exec_script(std::cin);
  std::ifstream in(script_path);
  if (!in) {
    std::cerr << "error: cannot open " << script_path << "\n";
    return 3;
  }
  return session.exec_script(in);
}
