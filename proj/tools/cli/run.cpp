#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace regtrace::cli {

namespace {

struct GraphSourceFlags {
  std::string graph_file;
  GeneratorOptions gen;
};

void add_generator_flags(CLI::App* cmd, GeneratorOptions& gen) {
  cmd->add_option("--kind", gen.kind, "cycle | complete | petersen | hypercube | circulant | random-regular")
      ->check(CLI::IsMember({"cycle", "complete", "petersen", "hypercube", "circulant", "random-regular"}));
  cmd->add_option("--n", gen.n, "Vertex count (cycle, complete, circulant, random-regular)");
  cmd->add_option("--degree", gen.degree, "Degree for random-regular");
  cmd->add_option("--dim", gen.dimension, "Dimension for hypercube");
  cmd->add_option("--offsets", gen.offsets, "Offsets for circulant, comma separated")->delimiter(',');
  cmd->add_option("--seed", gen.seed, "Seed for random-regular");
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& format) {
  cmd->add_option("--out", cfg.out, "Output path (default: stdout)");
  cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--budget-vertices", cfg.budgets.oracle_vertices, "Oracle vertex cap");
  cmd->add_option("--budget-length", cfg.budgets.oracle_length, "Oracle path length cap");
  cmd->add_option("--budget-quadrature", cfg.budgets.quadrature_refinements, "Quadrature doubling cap");
  cmd->add_option("--budget-rejection", cfg.budgets.rejection, "random-regular rejection budget");
  cmd->add_option("--eigen-tol", cfg.budgets.eigen_tolerance, "Jacobi off-diagonal norm threshold");
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out) {
    write_atomically(*cfg.out, content);
  } else {
    std::cout << content;
  }
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Exact and numeric checks of the trace formula for regular graphs"};
  app.set_version_flag("--version", std::string(version()));
  app.set_config("--config", "", "Optional TOML/INI config file; flags override it");
  app.require_subcommand(1);

  RunConfig cfg;
  GraphSourceFlags src;
  std::string format;

  auto* gen_cmd = app.add_subcommand("generate", "Write a generated graph document");
  add_generator_flags(gen_cmd, src.gen);
  gen_cmd->get_option("--kind")->required();
  add_common_flags(gen_cmd, cfg, format);

  auto add_graph_source = [&](CLI::App* cmd) {
    auto* file = cmd->add_option("--graph", src.graph_file, "Graph document (JSON)");
    add_generator_flags(cmd, src.gen);
    file->excludes(cmd->get_option("--kind"));
    add_common_flags(cmd, cfg, format);
  };

  auto* census_cmd = app.add_subcommand("census", "Exact p_l and gp_l table");
  add_graph_source(census_cmd);
  census_cmd->add_option("--l-max", cfg.l_max, "Largest length");

  auto* verify_cmd = app.add_subcommand("verify", "Run every verification stage and report");
  add_graph_source(verify_cmd);
  verify_cmd->add_option("--l-max", cfg.l_max, "Largest length for the exact stages");
  verify_cmd->add_option("--l-trunc", cfg.l_trunc, "Geodesic truncation for the numeric stages");
  verify_cmd->add_option("--t", cfg.t_values, "Evaluation points, comma separated")->delimiter(',');

  auto* density_cmd = app.add_subcommand("density", "Sample the contractible and truncated total densities");
  add_graph_source(density_cmd);
  density_cmd->add_option("--l-trunc", cfg.l_trunc, "Geodesic truncation");
  density_cmd->add_option("--grid", cfg.grid, "Number of sample points");

  auto* series_cmd = app.add_subcommand("series", "Dump a generating-function coefficient table as CSV");
  series_cmd->add_option("--q", cfg.q, "Valence minus one")->required();
  series_cmd->add_option("--l-max", cfg.l_max, "Largest exponent");
  series_cmd->add_option("--m", cfg.m, "Geodesic length for trajectory/homotopy tables");
  series_cmd->add_option("--table", cfg.table, "tree | first-return | prohibited | trajectory | homotopy");
  series_cmd->add_option("--out", cfg.out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* chosen = app.get_subcommands().front();
  if (chosen == gen_cmd) cfg.command = Command::Generate;
  if (chosen == census_cmd) cfg.command = Command::Census;
  if (chosen == verify_cmd) cfg.command = Command::Verify;
  if (chosen == density_cmd) cfg.command = Command::Density;
  if (chosen == series_cmd) cfg.command = Command::Series;
  if (!src.graph_file.empty()) cfg.graph_file = src.graph_file;
  if (!src.gen.kind.empty()) cfg.generator = src.gen;
  if (format == "json") cfg.format = OutputFormat::Json;
  if (format == "csv") cfg.format = OutputFormat::Csv;

  try {
    validate(cfg);
    switch (cfg.command) {
      case Command::Generate: emit(cfg, cmd_generate(cfg)); return 0;
      case Command::Census: emit(cfg, cmd_census(cfg)); return 0;
      case Command::Density: emit(cfg, cmd_density(cfg)); return 0;
      case Command::Series: emit(cfg, cmd_series(cfg)); return 0;
      case Command::Verify: {
        const auto outcome = cmd_verify(cfg);
        emit(cfg, outcome.report.dump(2) + "\n");
        if (!outcome.passed) std::cerr << "verification failed\n";
        return outcome.passed ? 0 : 1;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace regtrace::cli
