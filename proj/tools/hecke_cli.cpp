#include <CLI11.hpp>
#include <iostream>

#include "hecke/cli.hpp"

int main(int argc, char **argv) {
  CLI::App app{"Exact DAHA / Calogero-Moser verification suites"};
  app.require_subcommand(1);
  hecke::RunConfig cfg;
  std::string input, output;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--n", cfg.n, "rank n");
    sub->add_option("--seed", cfg.seed, "PRNG seed");
    sub->add_option("--trials", cfg.trials, "number of random trials");
    sub->add_option("--output", output, "report path (stdout when omitted)");
  };
  for (const char *name : {"verify", "cm-map", "z-spec", "chart", "jordan", "poisson"}) {
    auto *sub = app.add_subcommand(name);
    add_common(sub);
    sub->add_option("--tau", cfg.tau, "tau as p/q");
    sub->add_option("--input", input, "JSON file with explicit characters");
  }
  auto *dunkl = app.add_subcommand("dunkl", "Dunkl operator relation sweep");
  add_common(dunkl);
  dunkl->add_option("--t", cfg.t, "t as p/q");
  dunkl->add_option("--c", cfg.c, "c as p/q");
  dunkl->add_option("--degree-bound", cfg.degree_bound, "monomial window");
  dunkl->add_option("--flavor", cfg.flavor, "rational, trig or both");
  auto *dual = app.add_subcommand("dual-trig", "bispectral dual representation");
  add_common(dual);
  dual->add_option("--c", cfg.c, "c as p/q");
  std::string report;
  auto *validate = app.add_subcommand("validate", "check a report against the schema");
  validate->add_option("report", report)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }
  if (validate->parsed()) {
    bool ok = hecke::report_schema_validate(report);
    std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? 0 : 1;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (!input.empty()) cfg.input_path = input;
  if (!output.empty()) cfg.output_path = output;
  auto res = hecke::run(cfg);
  if (res.exit_code == 2) {
    std::cerr << "error: " << res.error << "\n";
    return 2;
  }
  if (!cfg.output_path) std::cout << res.report.dump(2) << "\n";
  auto &s = res.report["summary"];
  std::cerr << cfg.subcommand << ": " << s["failed"].get<std::size_t>() << " of " << s["total"].get<std::size_t>()
            << " checks failed\n";
  return res.exit_code;
}
