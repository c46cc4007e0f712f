#include "cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace regtrace::cli {

using nlohmann::json;

namespace {

std::string to_string(const BigInt& x) { return x.str(); }

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) { return cfg.format.value_or(fallback); }

GeneratorSpec to_spec(const GeneratorOptions& opt, const Budgets& budgets) {
  if (opt.kind == "cycle") return CycleSpec{opt.n};
  if (opt.kind == "complete") return CompleteSpec{opt.n};
  if (opt.kind == "petersen") return PetersenSpec{};
  if (opt.kind == "hypercube") return HypercubeSpec{opt.dimension};
  if (opt.kind == "circulant") return CirculantSpec{opt.n, opt.offsets};
  if (opt.kind == "random-regular") return RandomRegularSpec{opt.n, opt.degree, opt.seed, budgets.rejection};
  throw UsageError("unknown generator kind '" + opt.kind + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Generate: return "generate";
    case Command::Census: return "census";
    case Command::Verify: return "verify";
    case Command::Density: return "density";
    case Command::Series: return "series";
  }
  return "unknown";
}

json big_array(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

OracleBudget oracle_budget(const Budgets& b) {
  OracleBudget budget;
  budget.max_vertices = b.oracle_vertices;
  budget.max_length = b.oracle_length;
  return budget;
}

// ---------------------------------------------------------------------------
// Verification stages. Each returns its own pass flag inside the json.

json stage_spectrum(const Graph& g, const Spectrum& sp, const std::vector<BigInt>& p) {
  const double top = g.q() + 1.0;
  double sum = 0.0, sq = 0.0;
  for (double x : sp.eigenvalues) {
    sum += x;
    sq += x * x;
  }
  const bool in_range = sp.eigenvalues.front() >= -top - 1e-9 && sp.eigenvalues.back() <= top + 1e-9;
  const bool top_ok = std::abs(sp.eigenvalues.back() - top) < 1e-9;
  const bool bipartite = is_bipartite(g);
  const bool parity_ok = (std::abs(sp.eigenvalues.front() + top) < 1e-9) == bipartite;

  bool moments_ok = true;
  json moments = json::array();
  for (int k = 1; k <= 6 && k < static_cast<int>(p.size()); ++k) {
    double moment = 0.0;
    for (double x : sp.eigenvalues) moment += std::pow(x, k);
    const double exact = p[static_cast<std::size_t>(k)].convert_to<double>();
    const bool ok = std::abs(moment - exact) <= 1e-6 * std::max(1.0, exact);
    moments_ok = moments_ok && ok;
    moments.push_back({{"k", k}, {"spectral", moment}, {"p_k", to_string(p[static_cast<std::size_t>(k)])},
                       {"passed", ok}});
  }
  const bool passed = std::abs(sum) < 1e-9 && std::abs(sq - 2.0 * g.edge_count()) < 1e-8 && in_range && top_ok &&
                      parity_ok && moments_ok;
  return {{"name", "spectrum"},
          {"passed", passed},
          {"eigenvalues", sp.eigenvalues},
          {"sum", sum},
          {"sum_of_squares", sq},
          {"bipartite", bipartite},
          {"moments", moments}};
}

json stage_master_identity(const Graph& g, int l_max) {
  json rows = json::array();
  bool passed = true;
  for (const auto& row : master_identity(g, l_max)) {
    passed = passed && row.holds();
    rows.push_back({{"l", row.l},
                    {"p_l", to_string(row.closed_paths)},
                    {"contractible", to_string(row.contractible)},
                    {"geodesic", to_string(row.geodesic)},
                    {"holds", row.holds()}});
  }
  return {{"name", "master_identity"}, {"passed", passed}, {"rows", rows}};
}

json stage_homotopy_census(const Graph& g, int l_max, const Budgets& budgets) {
  if (g.vertex_count() > budgets.oracle_vertices) {
    return {{"name", "homotopy_census"},
            {"passed", true},
            {"skipped", true},
            {"reason", "vertex count exceeds oracle budget"}};
  }
  const int top = std::min(l_max, budgets.oracle_length);
  const auto tree = tree_walk_counts(g.q(), top);
  const auto p = count_closed_paths(g, top);
  bool passed = true;
  json rows = json::array();
  for (int l = 0; l <= top; ++l) {
    const auto census = homotopy_census(g, l, oracle_budget(budgets));
    BigInt total = 0;
    BigInt contractible = 0;
    std::size_t classes = 0, mismatched = 0;
    for (const auto& [cls, count] : census) {
      total += count;
      if (std::holds_alternative<Contractible>(cls)) {
        contractible = count;
      } else {
        const auto& gc = std::get<GeodesicClass>(cls);
        ++classes;
        if (count != gc.lambda * homotopy_class_coefficients(g.q(), gc.length, l)[static_cast<std::size_t>(l)]) {
          ++mismatched;
        }
      }
    }
    const bool ok = total == p[static_cast<std::size_t>(l)] &&
                    contractible == g.vertex_count() * tree.p_tree[static_cast<std::size_t>(l)] && mismatched == 0;
    passed = passed && ok;
    rows.push_back({{"l", l},
                    {"paths", to_string(total)},
                    {"contractible", to_string(contractible)},
                    {"classes", classes},
                    {"mismatched_classes", mismatched},
                    {"passed", ok}});
  }
  return {{"name", "homotopy_census"}, {"passed", passed}, {"skipped", false}, {"rows", rows}};
}

json stage_geodesic_inversion(const Graph& g, const Spectrum& sp, const std::vector<BigInt>& gp, int l_max,
                              const Budgets& budgets) {
  std::optional<std::vector<BigInt>> enumerated;
  if (g.vertex_count() <= budgets.oracle_vertices && l_max <= budgets.oracle_length) {
    enumerated.emplace(static_cast<std::size_t>(l_max) + 1, BigInt(0));
    for (const auto& gc : enumerate_geodesics(g, l_max)) (*enumerated)[static_cast<std::size_t>(gc.length)] += gc.lambda;
  }
  bool passed = true;
  json rows = json::array();
  for (int l = 1; l <= l_max; ++l) {
    const auto i = static_cast<std::size_t>(l);
    json row{{"l", l}, {"transfer", to_string(gp[i])}};
    bool ok = true;
    try {
      const BigInt spectral = gp_from_spectrum(sp, l);
      row["spectral"] = to_string(spectral);
      ok = spectral == gp[i];
    } catch (const Error& e) {
      row["error"] = e.what();
      ok = false;
    }
    if (enumerated) {
      row["enumerated"] = to_string((*enumerated)[i]);
      ok = ok && (*enumerated)[i] == gp[i];
    }
    row["passed"] = ok;
    passed = passed && ok;
    rows.push_back(row);
  }
  return {{"name", "geodesic_inversion"}, {"passed", passed}, {"rows", rows}};
}

json stage_trace_formula(const Spectrum& sp, const std::vector<BigInt>& gp, const RunConfig& cfg) {
  QuadratureOptions quad;
  quad.max_refinements = cfg.budgets.quadrature_refinements;
  bool passed = true;
  json reports = json::array();
  for (double t : cfg.t_values) {
    const auto r = verify_trace_formula(sp, gp, t, cfg.l_trunc, 1e-8, quad);
    passed = passed && r.passed;
    reports.push_back(trace_report_to_json(r));
  }
  return {{"name", "trace_formula"}, {"passed", passed}, {"reports", reports}};
}

json stage_ahumada(const Spectrum& sp, const std::vector<BigInt>& gp, const RunConfig& cfg) {
  const int top = std::min(cfg.l_max, cfg.l_trunc);
  bool passed = true;
  json rows = json::array();
  for (int l = 1; l <= top; ++l) {
    const auto r = ahumada_terms(sp, gp, TestSequence::indicator(l), cfg.l_trunc);
    // Compare on the scale of the individual terms.
    const double scale = std::max({1.0, std::abs(r.lhs), std::abs(r.identity_term), std::abs(r.geodesic_term)});
    const bool ok = r.residual <= 1e-8 * scale;
    passed = passed && ok;
    rows.push_back({{"l", l},
                    {"lhs", r.lhs},
                    {"identity_term", r.identity_term},
                    {"geodesic_term", r.geodesic_term},
                    {"residual", r.residual},
                    {"passed", ok}});
  }
  return {{"name", "ahumada_indicator"}, {"passed", passed}, {"rows", rows}};
}

json stage_polygon(const Graph& g, const RunConfig& cfg) {
  bool passed = true;
  json rows = json::array();
  for (double t : cfg.t_values) {
    const int r_trunc = polygon_truncation(g.vertex_count(), t);
    const double residual = verify_polygon_identity(g.vertex_count(), t, r_trunc);
    const bool ok = residual < 1e-10;
    passed = passed && ok;
    rows.push_back({{"t", t}, {"r_trunc", r_trunc}, {"residual", residual}, {"passed", ok}});
  }
  return {{"name", "polygon_identity"}, {"passed", passed}, {"rows", rows}};
}

json run_stage(const std::string& name, const std::function<json()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {{"name", name}, {"passed", false}, {"error", e.what()}, {"error_kind", std::string(to_string(e.kind()))}};
  }
}

}  // namespace

void validate(const RunConfig& cfg) {
  const auto& b = cfg.budgets;
  if (b.oracle_vertices <= 0 || b.oracle_length <= 0 || b.quadrature_refinements <= 0 || b.rejection <= 0 ||
      !(b.eigen_tolerance > 0.0)) {
    throw UsageError("all budgets must be positive");
  }
  for (double t : cfg.t_values) {
    if (!std::isfinite(t)) throw UsageError("t values must be finite");
  }
  if (cfg.l_max < 0) throw UsageError("--l-max must be nonnegative");
  const bool needs_graph = cfg.command != Command::Generate && cfg.command != Command::Series;
  if (needs_graph && cfg.graph_file.has_value() == cfg.generator.has_value()) {
    throw UsageError("give exactly one graph source: --graph FILE or --kind ...");
  }
  if (cfg.command == Command::Generate && !cfg.generator) throw UsageError("generate needs --kind");
  if (cfg.command == Command::Verify) {
    if (cfg.l_trunc < 3) throw UsageError("--l-trunc must be at least 3");
    if (cfg.t_values.empty()) throw UsageError("--t needs at least one value");
  }
  if (cfg.command == Command::Density && cfg.grid < 2) throw UsageError("--grid must be at least 2");
}

Graph load_graph(const RunConfig& cfg) {
  if (cfg.graph_file) return build_graph(parse_graph_document(read_file(*cfg.graph_file)));
  if (cfg.generator) return generate(to_spec(*cfg.generator, cfg.budgets));
  throw UsageError("no graph source");
}

json config_to_json(const RunConfig& cfg) {
  json j{{"command", command_name(cfg.command)},
         {"l_max", cfg.l_max},
         {"l_trunc", cfg.l_trunc},
         {"t_values", cfg.t_values},
         {"grid", cfg.grid},
         {"budgets",
          {{"oracle_vertices", cfg.budgets.oracle_vertices},
           {"oracle_length", cfg.budgets.oracle_length},
           {"quadrature_refinements", cfg.budgets.quadrature_refinements},
           {"rejection", cfg.budgets.rejection},
           {"eigen_tolerance", cfg.budgets.eigen_tolerance}}}};
  if (cfg.graph_file) j["graph_file"] = *cfg.graph_file;
  if (cfg.generator) {
    const auto& g = *cfg.generator;
    j["generator"] = {{"kind", g.kind}, {"n", g.n},           {"degree", g.degree},
                      {"dimension", g.dimension}, {"offsets", g.offsets}, {"seed", g.seed}};
  }
  if (cfg.out) j["out"] = *cfg.out;
  return j;
}

json trace_report_to_json(const TraceReport& r) {
  return {{"t", r.t},
          {"lhs", r.lhs},
          {"contractible_term", r.contractible_term},
          {"geodesic_sum", r.geodesic_sum},
          {"truncation_length", r.truncation_length},
          {"tail_bound", r.tail_bound},
          {"residual", r.residual},
          {"tolerance", r.tolerance},
          {"passed", r.passed}};
}

std::string cmd_generate(const RunConfig& cfg) {
  return serialize_graph_document(to_document(generate(to_spec(*cfg.generator, cfg.budgets))));
}

std::string cmd_census(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  const auto table = census_table(g, cfg.l_max);
  if (format_or(cfg, OutputFormat::Csv) == OutputFormat::Csv) {
    std::ostringstream out;
    write_census_csv(out, table);
    return out.str();
  }
  json j{{"schema_version", kSchemaVersion}, {"library_version", version()}, {"config", config_to_json(cfg)},
         {"graph", g.name()},                {"p", big_array(table.p)},    {"gp", big_array(table.gp)}};
  return j.dump(2) + "\n";
}

std::string cmd_density(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  const auto table = density_table(g, cfg.l_trunc, cfg.grid);
  if (format_or(cfg, OutputFormat::Csv) == OutputFormat::Csv) {
    std::ostringstream out;
    out.precision(17);
    out << "s,rho_con,rho_total\n";
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
      out << table.grid[i] << ',' << table.rho_con[i] << ',' << table.rho_total[i] << '\n';
    }
    return out.str();
  }
  json j{{"schema_version", kSchemaVersion},
         {"library_version", version()},
         {"config", config_to_json(cfg)},
         {"note", "rho_total is a truncation of a distribution supported on the eigenvalues"},
         {"s", table.grid},
         {"rho_con", table.rho_con},
         {"rho_total", table.rho_total}};
  return j.dump(2) + "\n";
}

std::string cmd_series(const RunConfig& cfg) {
  std::vector<BigInt> coefficients;
  if (cfg.table == "tree") {
    coefficients = tree_walk_counts(cfg.q, cfg.l_max).p_tree;
  } else if (cfg.table == "first-return") {
    coefficients = first_return_series(cfg.q, cfg.l_max).integer_coefficients();
  } else if (cfg.table == "prohibited") {
    coefficients = prohibited_direction_counts(cfg.q, cfg.l_max);
  } else if (cfg.table == "trajectory") {
    coefficients = trajectory_class_coefficients(cfg.q, cfg.m, cfg.l_max);
  } else if (cfg.table == "homotopy") {
    coefficients = homotopy_class_coefficients(cfg.q, cfg.m, cfg.l_max);
  } else {
    throw UsageError("unknown table '" + cfg.table + "'");
  }
  std::ostringstream out;
  write_coefficients_csv(out, coefficients);
  return out.str();
}

VerificationOutcome cmd_verify(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  EigenOptions eigen;
  eigen.off_diagonal_tolerance = cfg.budgets.eigen_tolerance;

  json stages = json::array();
  std::optional<Spectrum> sp;
  std::vector<BigInt> gp;
  const int counts_to = std::max({cfg.l_max, cfg.l_trunc, 6});
  const auto p = count_closed_paths(g, counts_to);
  gp = count_geodesic_paths(g, counts_to);

  stages.push_back(run_stage("spectrum", [&] {
    sp = spectrum(g, eigen);
    return stage_spectrum(g, *sp, p);
  }));
  stages.push_back(run_stage("master_identity", [&] { return stage_master_identity(g, cfg.l_max); }));
  stages.push_back(run_stage("homotopy_census", [&] { return stage_homotopy_census(g, cfg.l_max, cfg.budgets); }));
  if (sp) {
    stages.push_back(
        run_stage("geodesic_inversion", [&] { return stage_geodesic_inversion(g, *sp, gp, cfg.l_max, cfg.budgets); }));
    stages.push_back(run_stage("trace_formula", [&] { return stage_trace_formula(*sp, gp, cfg); }));
    stages.push_back(run_stage("ahumada_indicator", [&] { return stage_ahumada(*sp, gp, cfg); }));
  }
  if (g.q() == 1) stages.push_back(run_stage("polygon_identity", [&] { return stage_polygon(g, cfg); }));

  bool passed = sp.has_value();
  for (const auto& s : stages) passed = passed && s.at("passed").get<bool>();

  json report{{"schema_version", kSchemaVersion},
              {"library_version", version()},
              {"config", config_to_json(cfg)},
              {"graph",
               {{"name", g.name()},
                {"vertex_count", g.vertex_count()},
                {"edge_count", g.edge_count()},
                {"q", g.q()},
                {"bipartite", is_bipartite(g)}}},
              {"stages", stages},
              {"passed", passed}};
  return {report, passed};
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + temp.string() + "'");
    out << content;
    if (!out.flush()) throw UsageError("write to '" + temp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw UsageError("cannot move output into place at '" + path + "'");
  }
}

}  // namespace regtrace::cli
