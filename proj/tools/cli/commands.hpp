#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regtrace/regtrace.hpp"

namespace regtrace::cli {

enum class Command { Generate, Census, Verify, Density, Series };
enum class OutputFormat { Json, Csv };

struct GeneratorOptions {
  std::string kind;  // cycle | complete | petersen | hypercube | circulant | random-regular
  int n = 0;
  int degree = 0;
  int dimension = 0;
  std::vector<int> offsets;
  std::uint64_t seed = 0;
};

struct Budgets {
  int oracle_vertices = 16;
  int oracle_length = 12;
  int quadrature_refinements = 24;
  int rejection = 10'000;
  double eigen_tolerance = 1e-12;
};

struct RunConfig {
  Command command = Command::Verify;
  std::optional<std::string> graph_file;
  std::optional<GeneratorOptions> generator;
  int l_max = 12;
  int l_trunc = 24;
  std::vector<double> t_values{0.25, 0.5, 1.0};
  int grid = 201;
  std::optional<std::string> out;
  std::optional<OutputFormat> format;
  Budgets budgets;
  // `series` debug dump
  int q = 2;
  int m = 3;
  std::string table = "tree";
};

/// Thrown for bad flags, unreadable files and similar; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

void validate(const RunConfig& cfg);
Graph load_graph(const RunConfig& cfg);
nlohmann::json config_to_json(const RunConfig& cfg);
nlohmann::json trace_report_to_json(const TraceReport& r);

std::string cmd_generate(const RunConfig& cfg);
std::string cmd_census(const RunConfig& cfg);
std::string cmd_density(const RunConfig& cfg);
std::string cmd_series(const RunConfig& cfg);

struct VerificationOutcome {
  nlohmann::json report;
  bool passed = false;
};
VerificationOutcome cmd_verify(const RunConfig& cfg);

/// Writes to a temporary sibling and renames it over `path`.
void write_atomically(const std::string& path, const std::string& content);

/// Full command-line entry point. Returns the process exit status:
/// 0 success, 1 verification failure, 2 usage or IO error.
int run(int argc, const char* const* argv);

}  // namespace regtrace::cli
