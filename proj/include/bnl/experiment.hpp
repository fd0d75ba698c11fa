#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnl/trainer.hpp"
#include "bnl/types.hpp"

// Seeded end-to-end benchmark runner: per simulation it samples an instance,
// builds (or re-splits) a dataset, trains each requested method on the
// training part and reports mean test regret plus the mean true optimal
// value. Everything is reproducible from the seed; simulation i uses streams
// derived from seed + i, so single simulations can be replayed.

namespace bnl {

enum class ProblemKind { knapsack, shortest_path, min_cost_flow, vertex_cover };
enum class Method { bnl, lr };

std::string to_string(ProblemKind kind);
std::string to_string(Method method);
ProblemKind problem_from_string(const std::string& s);
Method method_from_string(const std::string& s);

struct ExperimentConfig {
  ProblemKind problem = ProblemKind::vertex_cover;
  std::string graph_path;   // required for graph problems
  std::string graph_name;   // rule-table key; defaults to the file stem
  std::string dataset_csv;  // when empty, artificial data is generated
  int n = 100;              // dataset size (artificial mode)
  int sims = 1;
  std::vector<Method> methods = {Method::bnl, Method::lr};
  std::uint64_t seed = 0;
  TrainConfig train;
  double split_ratio = 0.7;
  double demand = 20.0;      // flow problems
  int items = 10;            // knapsack items
  double offset = 200.0;     // artificial-truth offset
  bool degrees = false;      // trigonometric arguments in degrees
  bool record_timing = true; // when false, the seconds column is zeroed
  std::optional<int> fixed_source;
  std::optional<int> fixed_sink;
};

struct ReportRow {
  std::string method;
  std::string problem;
  std::string graph;
  int n = 0;
  int sim = 0;
  Vec test_regrets;          // one entry per test example
  double mean_regret = 0.0;
  double std_regret = 0.0;   // across test examples
  double mean_tov = 0.0;
  double seconds = 0.0;
};

bool operator==(const ReportRow& a, const ReportRow& b);

struct ExperimentResult {
  std::vector<ReportRow> rows;
  int skipped_sims = 0;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

enum class ReportFormat { csv, json };

void emit_report(const std::vector<ReportRow>& rows, const std::string& path,
                 ReportFormat format);
std::string render_report_csv(const std::vector<ReportRow>& rows);
std::string render_report_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> parse_report_json(const std::string& text);

}  // namespace bnl
