#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>

#include "cdlat/errors.hpp"
#include "cdlat/genkit.hpp"
#include "cdlat/islands.hpp"
#include "commands.hpp"
#include "report.hpp"

namespace cdlat::cli {

namespace {

using namespace cdlat::islands;

std::string rect_text(const CellRect& r) {
  return std::to_string(r.c1) + ' ' + std::to_string(r.r1) + ' ' + std::to_string(r.c2) + ' ' +
         std::to_string(r.r2);
}

Json rect_json(const CellRect& r) { return {r.c1, r.r1, r.c2, r.r2}; }

void list_rects(Report& report, const IslandSystem& system) {
  Json all = Json::array();
  for (const CellRect& r : system) {
    report.line(rect_text(r));
    all.push_back(rect_json(r));
  }
  if (report.json_mode()) report.json("rectangles") = std::move(all);
}

int run_count(const Context& ctx, const std::string& path, bool list) {
  const HeightFunction h = read_heights_csv_file(path);
  const IslandSystem system = enumerate_islands(h, ctx.cap.value_or(kDefaultBoardCap));
  Report report(std::cout, ctx.json);
  report.field("islands", system.size());
  if (list) list_rects(report, system);
  report.finish();
  return kOk;
}

int run_max(const Context& ctx, int m, int n, bool oracle, bool construct, bool list) {
  if (m < 1 || n < 1) throw PreconditionViolated("board needs m, n >= 1");
  const long long formula = f_formula(m, n);
  long long count = formula;
  IslandSystem witness;
  if (oracle) {
    OracleResult r = max_islands_oracle(m, n, ctx.cap.value_or(kDefaultOracleCap));
    count = r.count;
    witness = std::move(r.witness);
  } else if (construct) {
    const HeightFunction h = max_islands_construct(m, n);
    witness = enumerate_islands(h, std::max<std::size_t>(ctx.cap.value_or(kDefaultBoardCap),
                                                         static_cast<std::size_t>(m * n)));
    count = static_cast<long long>(witness.size());
    if (!ctx.output.empty()) {
      std::ofstream out(ctx.output);
      if (!out) throw ParseError("cannot write " + ctx.output);
      write_heights_csv(out, h);
    }
  }
  Report report(std::cout, ctx.json);
  if (report.json_mode()) {
    report.field("m", m);
    report.field("n", n);
    report.field("method", oracle ? "oracle" : construct ? "construct" : "formula");
    report.field("count", count);
    report.field("formula", formula);
  } else {
    report.line(std::to_string(count));
  }
  if (list) list_rects(report, witness);
  report.finish();
  if (count != formula) {
    std::cerr << "count " << count << " differs from floor((mn+m+n-1)/2) = " << formula << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int run_verify(const Context& ctx, int m, int n) {
  if (m < 1 || n < 1) throw PreconditionViolated("board needs m, n >= 1");
  const Board board{m, n};
  const PointRect full = grid_of(CellRect::whole(board));
  std::size_t forward_failures = 0;
  std::size_t backward_failures = 0;
  Report report(std::cout, ctx.json);
  for (std::size_t t = 0; t < ctx.trials; ++t) {
    const std::uint64_t seed = ctx.seed + t;
    const HeightFunction h = gen::random_heights(seed, board, 4);
    const std::vector<PointRect> grids = sgrid(enumerate_islands(h));
    if (!is_laminar(grids) || std::find(grids.begin(), grids.end(), full) == grids.end()) {
      ++forward_failures;
      report.line("forward failure: seed " + std::to_string(seed));
    }
    const IslandSystem system =
        gen::random_laminar_system(seed, board, static_cast<std::size_t>(2 * m * n));
    if (enumerate_islands(realize_heights(board, system)) != system) {
      ++backward_failures;
      report.line("round-trip failure: seed " + std::to_string(seed));
    }
  }
  report.field("trials", ctx.trials);
  report.field("forward-failures", forward_failures);
  report.field("round-trip-failures", backward_failures);
  report.finish();
  return forward_failures + backward_failures == 0 ? kOk : kVerificationFailed;
}

}  // namespace

void add_island_commands(CLI::App& app, Context& ctx) {
  struct Args {
    std::string path;
    int m = 1;
    int n = 1;
    bool list = false;
    bool oracle = false;
    bool construct = false;
  };
  auto args = std::make_shared<Args>();

  CLI::App* islands = app.add_subcommand("islands", "Rectangular islands on a board");
  islands->require_subcommand(1);

  CLI::App* count = islands->add_subcommand("count", "Islands of a height CSV");
  count->add_option("csv", args->path, "Height CSV, one board row per line")->required();
  count->add_flag("--list", args->list, "Print each island as c1 r1 c2 r2");
  count->callback([&ctx, args] { ctx.exit_code = run_count(ctx, args->path, args->list); });

  CLI::App* max = islands->add_subcommand("max", "Maximum number of islands (default: formula)");
  max->add_option("m", args->m, "Columns")->required();
  max->add_option("n", args->n, "Rows")->required();
  auto* o = max->add_flag("--oracle", args->oracle, "Exhaustive packing search");
  auto* c = max->add_flag("--construct", args->construct, "Count islands of the construction");
  o->excludes(c);
  max->add_flag("--list", args->list, "Print the witness system");
  max->callback([&ctx, args] {
    ctx.exit_code = run_max(ctx, args->m, args->n, args->oracle, args->construct, args->list);
  });

  CLI::App* verify = islands->add_subcommand("verify", "Random grid/laminarity round trips");
  verify->add_option("m", args->m, "Columns")->required();
  verify->add_option("n", args->n, "Rows")->required();
  verify->callback([&ctx, args] { ctx.exit_code = run_verify(ctx, args->m, args->n); });
}

}  // namespace cdlat::cli
