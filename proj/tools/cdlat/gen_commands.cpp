#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "cdlat/errors.hpp"
#include "cdlat/genkit.hpp"
#include "cdlat/lattice_io.hpp"
#include "commands.hpp"
#include "report.hpp"

namespace cdlat::cli {

namespace {

namespace fs = std::filesystem;

std::ofstream open_in(const fs::path& dir, const std::string& name) {
  std::ofstream out(dir / name);
  if (!out) throw ParseError("cannot write " + (dir / name).string());
  return out;
}

int run_posets(const Context& ctx, std::size_t k) {
  const std::vector<gen::Poset> posets = gen::all_posets(k);
  if (!ctx.output.empty()) fs::create_directories(ctx.output);
  Report report(std::cout, ctx.json);
  Json sizes = Json::array();
  for (std::size_t i = 0; i < posets.size(); ++i) {
    const gen::DownsetLattice d = gen::downset_lattice(posets[i]);
    std::string relations;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (!posets[i].less(a, b)) continue;
        if (!relations.empty()) relations += ' ';
        relations += std::to_string(a) + '<' + std::to_string(b);
      }
    }
    report.line("poset " + std::to_string(i) + ": elements " + std::to_string(d.lattice.size()) +
                (relations.empty() ? "" : " relations " + relations));
    sizes.push_back(d.lattice.size());
    if (!ctx.output.empty()) {
      std::ofstream out =
          open_in(ctx.output, "poset" + std::to_string(k) + "_" + std::to_string(i) + ".lat");
      write_lattice(out, d.lattice);
    }
  }
  report.field("posets", posets.size());
  if (report.json_mode()) report.json("lattice_sizes") = std::move(sizes);
  report.finish();
  return kOk;
}

struct CircleArgs {
  std::size_t count = 3;
  std::string mode = "general";
  bool no_encapsulation = false;
  bool separated = false;
  bool concave = false;
  std::size_t budget = 200000;
};

int run_circles(const Context& ctx, const CircleArgs& args) {
  gen::CircleOptions options;
  options.allow_encapsulation = !args.no_encapsulation;
  options.force_separated = args.separated;
  options.force_concave = args.concave;
  options.rejection_budget = args.budget;
  options.eps = ctx.eps;
  const CircleMode mode = args.mode == "collinear" ? CircleMode::collinear : CircleMode::general;
  const CircleFamily f = gen::random_circle_family(ctx.seed, args.count, mode, options);
  if (ctx.output.empty()) {
    write_circles(std::cout, f);
  } else {
    std::ofstream out(ctx.output);
    if (!out) throw ParseError("cannot write " + ctx.output);
    write_circles(out, f);
  }
  return kOk;
}

int run_catalog(const Context& ctx) {
  const std::vector<gen::CatalogEntry> entries = gen::named_lattices();
  if (!ctx.output.empty()) fs::create_directories(ctx.output);
  Report report(std::cout, ctx.json);
  Json list = Json::array();
  for (const gen::CatalogEntry& e : entries) {
    report.line(e.name + ": " + std::to_string(e.lattice.size()) + " elements, " + e.note);
    list.push_back({{"name", e.name}, {"elements", e.lattice.size()}, {"note", e.note}});
    if (ctx.output.empty()) continue;
    {
      std::ofstream out = open_in(ctx.output, e.name + ".lat");
      write_lattice(out, e.lattice);
    }
    if (e.circles) {
      std::ofstream out = open_in(ctx.output, e.name + ".circles");
      write_circles(out, *e.circles);
    }
    if (e.short_maximal) {
      std::ofstream out = open_in(ctx.output, e.name + ".short");
      out << join(e.short_maximal->members()) << '\n';
    }
  }
  if (report.json_mode()) report.json("entries") = std::move(list);
  report.finish();
  return kOk;
}

}  // namespace

void add_gen_commands(CLI::App& app, Context& ctx) {
  auto k = std::make_shared<std::size_t>(1);
  auto circle_args = std::make_shared<CircleArgs>();

  CLI::App* gen = app.add_subcommand("gen", "Deterministic generators");
  gen->require_subcommand(1);

  CLI::App* posets = gen->add_subcommand("posets", "All labeled posets on k points");
  posets->add_option("k", *k, "Number of points (at most 5)")->required();
  posets->callback([&ctx, k] { ctx.exit_code = run_posets(ctx, *k); });

  CLI::App* circles = gen->add_subcommand("circles", "Seeded random circle family");
  circles->add_option("--count", circle_args->count, "Number of circles (1..10)")->required();
  circles->add_option("--mode", circle_args->mode, "general or collinear")
      ->check(CLI::IsMember({"general", "collinear"}));
  circles->add_flag("--no-encapsulation", circle_args->no_encapsulation,
                    "Reject families with one disk inside another");
  circles->add_flag("--separated", circle_args->separated, "Require a separated family");
  circles->add_flag("--concave", circle_args->concave, "Require a concave family");
  circles->add_option("--budget", circle_args->budget, "Rejection sampling budget");
  circles->callback([&ctx, circle_args] { ctx.exit_code = run_circles(ctx, *circle_args); });

  CLI::App* catalog = gen->add_subcommand("catalog", "Named lattices and circle families");
  catalog->callback([&ctx] { ctx.exit_code = run_catalog(ctx); });
}

}  // namespace cdlat::cli
