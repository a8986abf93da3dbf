#include <cstdint>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "segre/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Segre classes, projective degrees, multiplicities and containment tests"};
  app.usage("segre [OPTIONS] COMMAND FILE NAME...");

  segre::CommandOptions opt;
  std::string file;
  std::optional<std::uint64_t> seed;
  int table_bound = -1;
  app.add_option("command", opt.command, "One of: projdeg segre mult contains component-contains sing-contains "
                                         "intersect empty class dim")
      ->required()
      ->check(CLI::IsMember(segre::command_names()));
  app.add_option("file", file, "Problem file")->required();
  app.add_option("names", opt.names, "Ideal names from the file")->required();
  app.add_option("--seed", seed, "Master seed (default: drawn from entropy; always echoed)");
  app.add_option("--prime", opt.config.prime, "Working prime")->capture_default_str();
  app.add_option("--retries", opt.config.retries, "Extra randomized attempts per count")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", opt.json, "Emit JSON");
  app.add_option("--table-bound", table_bound, "projdeg: compute g_a for |a| up to this bound")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : segre::kExitParse;
  }

  if (seed) {
    opt.config.seed = *seed;
  } else {
    std::random_device rd;
    opt.config.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  if (table_bound >= 0) opt.table_bound = table_bound;

  const segre::CommandOutput out = segre::run_file(opt, file);
  std::cout << out.out;
  std::cerr << out.err;
  return out.exit_code;
}
