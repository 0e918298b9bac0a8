#include <iostream>

#include "CLI11.hpp"
#include "cdlat/errors.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace cdlat::cli;
  Context ctx;
  CLI::App app{"Lattices of CD-independent subsets, circle lattices and rectangular islands"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cap", ctx.cap, "Size cap for exhaustive enumeration");
  app.add_option("--seed", ctx.seed, "Seed for generators and random suites");
  app.add_option("--trials", ctx.trials, "Number of random trials");
  app.add_option("--eps", ctx.eps, "Geometry tolerance")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", ctx.output, "Output file or directory");
  app.add_flag("--json", ctx.json, "Print one JSON object per report");

  add_lattice_commands(app, ctx);
  add_circle_commands(app, ctx);
  add_island_commands(app, ctx);
  add_gen_commands(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  } catch (const cdlat::Error& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return ctx.exit_code;
}
