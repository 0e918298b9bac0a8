#include <iostream>
#include <memory>

#include "cdlat/cd_independence.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/lattice.hpp"
#include "cdlat/lattice_io.hpp"
#include "cdlat/properties.hpp"
#include "commands.hpp"
#include "report.hpp"

namespace cdlat::cli {

namespace {

int run_check(const Context& ctx, const std::string& path) {
  const Lattice l = read_lattice_file(path);
  Report report(std::cout, ctx.json);
  const Irreducibles irr = irreducibles(l);
  const Verdict md = is_meet_distributive(l);
  report.field("elements", l.size());
  report.field("bottom", l.bottom());
  report.field("top", l.top());
  report.verdict("distributive", is_distributive(l));
  report.verdict("meet-distributive", md);
  report.verdict("lower-semimodular", is_lower_semimodular(l));
  report.verdict("dually-slim", is_dually_slim(l));
  report.field("length", length(l));
  report.field("atoms", to_json(atoms(l)));
  report.field("coatoms", to_json(coatoms(l)));
  report.field("join-irreducible", to_json(irr.join_irreducible));
  report.field("meet-irreducible", to_json(irr.meet_irreducible));
  if (md.holds) {
    report.field("avann", avann_check(l));
  } else {
    report.field("avann", "n/a");
  }
  report.finish();
  return kOk;
}

int run_enumerate(const Context& ctx, const Lattice& l) {
  const auto sets = enumerate_maximal_cd(l, ctx.cap.value_or(kDefaultEnumerationCap));
  Report report(std::cout, ctx.json);
  Json all = Json::array();
  for (const ElementSet& y : sets) {
    report.line(join(y.members()));
    all.push_back(to_json(y));
  }
  if (report.json_mode()) {
    report.json("count") = sets.size();
    report.json("maximal_sets") = std::move(all);
  }
  report.finish();
  return kOk;
}

int run_bound(const Context& ctx, const Lattice& l) {
  Report report(std::cout, ctx.json);
  report.field("length", length(l));
  report.field("atoms", atoms(l).count());
  report.field("bound", cd_size_bound(l));
  report.finish();
  return kOk;
}

int run_theorem1(const Context& ctx, const Lattice& l) {
  Theorem1Options options;
  options.cap = ctx.cap.value_or(kDefaultEnumerationCap);
  const Theorem1Report r = verify_theorem1(l, options);
  Report report(std::cout, ctx.json);
  report.field("meet-distributive", r.meet_distributive);
  report.field("dually-slim-lower-semimodular", r.dually_slim_lsm);
  report.field("distributive", r.distributive);
  report.field("bound", r.bound);
  report.field("maximal-sets", r.maximal_sets);
  report.field("largest-maximal", r.largest_maximal);
  report.field("smallest-maximal", r.smallest_maximal);
  report.field("candidates", r.candidates);
  report.field("maximal-candidates", r.maximal_candidates);
  report.field("violations", r.violations.size());
  Json list = Json::array();
  for (const Theorem1Violation& v : r.violations) {
    report.line("violation part " + std::to_string(v.part) + ": X = " + join(v.x.members()) +
                " a=" + (v.maximal ? "1" : "0") + " b=" + (v.recursive ? "1" : "0") +
                " c=" + (v.incomparable ? "1" : "0"));
    list.push_back({{"part", v.part},
                    {"x", to_json(v.x)},
                    {"a", v.maximal},
                    {"b", v.recursive},
                    {"c", v.incomparable}});
  }
  if (report.json_mode()) report.json("violation_list") = std::move(list);
  report.finish();
  return r.ok() ? kOk : kVerificationFailed;
}

int run_corollary4(const Context& ctx, const Lattice& l) {
  const Corollary4Report r = verify_corollary4(l);
  Report report(std::cout, ctx.json);
  report.field("pairs-checked", r.pairs_checked);
  report.field("violations", r.violations.size());
  Json list = Json::array();
  for (const ElementPair& p : r.violations) {
    report.line("violation: " + std::to_string(p.first) + " " + std::to_string(p.second));
    list.push_back({p.first, p.second});
  }
  if (report.json_mode()) report.json("violation_list") = std::move(list);
  report.finish();
  return r.ok() ? kOk : kVerificationFailed;
}

}  // namespace

void add_lattice_commands(CLI::App& app, Context& ctx) {
  struct Args {
    std::string path;
    bool enumerate = false;
    bool bound = false;
    bool thm1 = false;
    bool cor4 = false;
  };
  auto args = std::make_shared<Args>();

  CLI::App* lat = app.add_subcommand("lat", "Finite lattices in the cover-pair text format");
  lat->require_subcommand(1);

  CLI::App* check = lat->add_subcommand("check", "Lattice properties with witnesses");
  check->add_option("file", args->path, "Lattice file")->required();
  check->callback([&ctx, args] { ctx.exit_code = run_check(ctx, args->path); });

  CLI::App* cd = lat->add_subcommand("cd", "CD-independent subsets (default: --enumerate)");
  cd->add_option("file", args->path, "Lattice file")->required();
  auto* e = cd->add_flag("--enumerate", args->enumerate, "List every maximal CD-independent subset");
  auto* b = cd->add_flag("--bound", args->bound, "Print length + |atoms|");
  auto* t = cd->add_flag("--verify-thm1", args->thm1, "Check the size bound and characterizations");
  auto* c = cd->add_flag("--verify-cor4", args->cor4, "Check complemented pseudocomplemented pairs");
  e->excludes(b)->excludes(t)->excludes(c);
  b->excludes(t)->excludes(c);
  t->excludes(c);
  cd->callback([&ctx, args] {
    const Lattice l = read_lattice_file(args->path);
    if (args->bound) {
      ctx.exit_code = run_bound(ctx, l);
    } else if (args->thm1) {
      ctx.exit_code = run_theorem1(ctx, l);
    } else if (args->cor4) {
      ctx.exit_code = run_corollary4(ctx, l);
    } else {
      ctx.exit_code = run_enumerate(ctx, l);
    }
  });
}

}  // namespace cdlat::cli
