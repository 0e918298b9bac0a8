#include <fstream>
#include <iostream>
#include <memory>

#include "cdlat/circles.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/lattice_io.hpp"
#include "commands.hpp"
#include "report.hpp"

namespace cdlat::cli {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  return out;
}

std::string ids_of(const CircleFamily& f, const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t i : indices) {
    if (!out.empty()) out += ' ';
    out += f.circles[i].id;
  }
  return out;
}

int run_check(const Context& ctx, const std::string& path) {
  const CircleFamily f = read_circles_file(path);
  Report report(std::cout, ctx.json);
  report.field("circles", f.size());
  report.field("mode", f.mode == CircleMode::collinear ? "collinear" : "general");
  if (f.mode != CircleMode::collinear) {
    report.field("separated", "n/a");
    report.field("concave", "n/a");
    report.finish();
    return kOk;
  }
  report.field("separated", is_separated(f, ctx.eps));
  const Verdict concave = is_concave(f, ctx.eps);
  if (report.json_mode()) {
    report.field("concave", concave.holds);
    if (!concave.holds) {
      Json ids = Json::array();
      for (std::size_t i : concave.witness) ids.push_back(f.circles[i].id);
      report.json("concave_witness") = ids;
    }
  } else if (concave.holds) {
    report.line("concave: true");
  } else {
    report.line("concave: false (witness " + ids_of(f, concave.witness) + ")");
  }
  report.finish();
  return kOk;
}

int run_lat(const Context& ctx, const std::string& path, const std::string& method) {
  const CircleFamily f = read_circles_file(path);
  const CircleLattice cl = method == "interval"
                               ? lat_interval(f, ctx.eps)
                               : lat_geometric(f, ctx.cap.value_or(kDefaultGeometricCap), ctx.eps);
  const std::vector<std::string> labels = cl.labels(f);
  if (ctx.output.empty()) {
    if (ctx.json) {
      Report report(std::cout, true);
      report.field("elements", cl.lattice.size());
      Json covers = Json::array();
      for (const auto& [x, y] : cl.lattice.covers()) covers.push_back({x, y});
      report.field("covers", covers);
      report.field("labels", labels);
      report.finish();
    } else {
      write_lattice(std::cout, cl.lattice);
    }
    return kOk;
  }
  {
    std::ofstream out = open_output(ctx.output);
    write_lattice(out, cl.lattice);
  }
  {
    std::ofstream out = open_output(ctx.output + ".labels");
    write_labels(out, labels);
  }
  Report report(std::cout, ctx.json);
  report.field("elements", cl.lattice.size());
  report.field("lattice", ctx.output);
  report.field("labels", ctx.output + ".labels");
  report.finish();
  return kOk;
}

int run_svg(const Context& ctx, const std::string& path, const std::vector<std::string>& ids) {
  const CircleFamily f = read_circles_file(path);
  std::optional<CircleSet> shaded;
  if (!ids.empty()) {
    CircleSet set;
    for (const std::string& id : ids) {
      std::size_t i = 0;
      while (i < f.size() && f.circles[i].id != id) ++i;
      if (i == f.size()) throw ParseError("unknown circle id '" + id + "'");
      set.insert(i);
    }
    if (!is_closed(f, set, ctx.eps)) {
      throw PreconditionViolated(format_circle_set(f, set) + " is not closed");
    }
    shaded = set;
  }
  const std::string svg = render_svg(f, shaded);
  if (ctx.output.empty()) {
    std::cout << svg;
  } else {
    std::ofstream out = open_output(ctx.output);
    out << svg;
  }
  return kOk;
}

}  // namespace

void add_circle_commands(CLI::App& app, Context& ctx) {
  struct Args {
    std::string path;
    std::string method = "geometric";
    std::vector<std::string> closed;
  };
  auto args = std::make_shared<Args>();

  CLI::App* circles = app.add_subcommand("circles", "Families of circles and their lattices");
  circles->require_subcommand(1);

  CLI::App* check = circles->add_subcommand("check", "Separated and concave verdicts");
  check->add_option("file", args->path, "Circle file")->required();
  check->callback([&ctx, args] { ctx.exit_code = run_check(ctx, args->path); });

  CLI::App* lat = circles->add_subcommand("lat", "Lattice of closed subsets");
  lat->add_option("file", args->path, "Circle file")->required();
  lat->add_option("--method", args->method, "geometric or interval")
      ->check(CLI::IsMember({"geometric", "interval"}));
  lat->callback([&ctx, args] { ctx.exit_code = run_lat(ctx, args->path, args->method); });

  CLI::App* svg = circles->add_subcommand("svg", "Static SVG drawing");
  svg->add_option("file", args->path, "Circle file")->required();
  svg->add_option("--closed", args->closed, "Comma-separated ids of a closed set to shade")
      ->delimiter(',');
  svg->callback([&ctx, args] { ctx.exit_code = run_svg(ctx, args->path, args->closed); });
}

}  // namespace cdlat::cli
