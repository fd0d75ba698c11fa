#include "bnl/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bnl/datagen.hpp"
#include "bnl/knapsack.hpp"
#include "bnl/min_cost_flow.hpp"
#include "bnl/shortest_path.hpp"
#include "bnl/vertex_cover.hpp"

namespace bnl {

namespace {

using Clock = std::chrono::steady_clock;

double mean_of(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sample_std(const Vec& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Per-simulation streams, so any simulation is replayable on its own.
enum Stream : std::uint64_t { kInstance = 1, kData = 2, kSplit = 3, kTrain = 4 };

std::uint64_t sim_seed(const ExperimentConfig& cfg, int sim, Stream stream) {
  return Rng::mix(cfg.seed + static_cast<std::uint64_t>(sim), stream);
}

template <typename S>
struct SimSetup {
  std::vector<typename S::Skeleton> skeletons;  // single shared skeleton
  bool feasible = true;
};

template <typename S>
ReportRow evaluate_method(const ExperimentConfig& cfg, Method method, int sim,
                          const SimSetup<S>& setup, const Dataset& train_set,
                          const Dataset& test_set) {
  ReportRow row;
  row.method = to_string(method);
  row.problem = to_string(cfg.problem);
  row.graph = cfg.graph_name;
  row.n = train_set.size() + test_set.size();
  row.sim = sim;

  const auto started = Clock::now();
  Coefficients alpha;
  if (method == Method::bnl) {
    TrainConfig train_cfg = cfg.train;
    train_cfg.seed = sim_seed(cfg, sim, kTrain);
    alpha = coordinate_descent<S>(setup.skeletons, train_set.examples,
                                  train_cfg)
                .alpha;
  } else {
    alpha = fit_least_squares(train_set.examples).alpha;
  }

  row.test_regrets.reserve(test_set.examples.size());
  Vec tovs;
  tovs.reserve(test_set.examples.size());
  for (const TrainingExample& ex : test_set.examples) {
    const Vec theta_hat = predict<S>(alpha, ex.features);
    row.test_regrets.push_back(
        regret<S>(setup.skeletons[0], theta_hat, ex.truth));
    tovs.push_back(true_optimum<S>(setup.skeletons[0], ex.truth));
  }
  row.mean_regret = mean_of(row.test_regrets);
  row.std_regret = sample_std(row.test_regrets);
  row.mean_tov = mean_of(tovs);
  if (cfg.record_timing) {
    row.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  }
  return row;
}

template <typename S>
SimSetup<S> make_setup(const ExperimentConfig& cfg, int sim, const Graph& g);

template <>
SimSetup<Knapsack> make_setup<Knapsack>(const ExperimentConfig& cfg, int sim,
                                        const Graph&) {
  Rng rng(sim_seed(cfg, sim, kInstance));
  KnapsackSkeleton sk;
  sk.costs.resize(cfg.items);
  double total = 0.0;
  for (double& c : sk.costs) {
    c = rng.uniform_int(1, 10);
    total += c;
  }
  sk.budget = std::max(1.0, std::round(0.5 * total));
  return {{std::move(sk)}, true};
}

template <>
SimSetup<VertexCover> make_setup<VertexCover>(const ExperimentConfig&, int,
                                              const Graph& g) {
  return {{McvcSkeleton(g)}, true};
}

template <>
SimSetup<ShortestPath> make_setup<ShortestPath>(const ExperimentConfig& cfg,
                                                int sim, const Graph& g) {
  Rng rng(sim_seed(cfg, sim, kInstance));
  const auto out_deg = out_degrees(g);
  const auto in_deg = in_degrees(g);
  std::vector<int> sources;
  std::vector<int> sinks;
  for (int v = 0; v < g.vertices; ++v) {
    if (out_deg[v] > 0) sources.push_back(v);
    if (in_deg[v] > 0) sinks.push_back(v);
  }
  const int s = cfg.fixed_source
                    ? *cfg.fixed_source
                    : sources[rng.next() % sources.size()];
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int t =
        cfg.fixed_sink ? *cfg.fixed_sink : sinks[rng.next() % sinks.size()];
    if (t == s) continue;
    SppSkeleton sk(g, s, t);
    // Reachability under unit costs decides feasibility.
    if (ext_finite(solve_shortest_path(sk, Vec(g.edges.size(), 1.0)).objective)) {
      return {{std::move(sk)}, true};
    }
    if (cfg.fixed_sink) break;
  }
  SimSetup<ShortestPath> setup{{SppSkeleton(g, s, (s + 1) % g.vertices)}, false};
  return setup;
}

template <>
SimSetup<MinCostFlow> make_setup<MinCostFlow>(const ExperimentConfig& cfg,
                                              int sim, const Graph& g) {
  const FlowInstance inst =
      gen_flow_instance(g, cfg.graph_name, sim_seed(cfg, sim, kInstance));
  Graph with_caps = g;
  with_caps.capacities = inst.capacities;
  const int source = cfg.fixed_source.value_or(inst.source);
  const int sink = cfg.fixed_sink.value_or(inst.sink);
  McfpSkeleton sk(std::move(with_caps), source, sink, cfg.demand);
  // Feasible only when the demand is routable at all.
  const auto unit = solve_min_cost_flow(sk, Vec(g.edges.size(), 1.0));
  const bool feasible = unit.solution.shortfall <= 0.0;
  return {{std::move(sk)}, feasible};
}

template <typename S>
int param_count(const SimSetup<S>& setup);

template <>
int param_count<Knapsack>(const SimSetup<Knapsack>& setup) {
  return static_cast<int>(setup.skeletons[0].costs.size());
}
template <>
int param_count<ShortestPath>(const SimSetup<ShortestPath>& setup) {
  return setup.skeletons[0].graph.edge_count();
}
template <>
int param_count<MinCostFlow>(const SimSetup<MinCostFlow>& setup) {
  return setup.skeletons[0].graph.edge_count();
}
template <>
int param_count<VertexCover>(const SimSetup<VertexCover>& setup) {
  return setup.skeletons[0].graph.vertices;
}

template <typename S>
ExperimentResult run_impl(const ExperimentConfig& cfg, const Graph& g) {
  std::optional<Dataset> shared;
  if (!cfg.dataset_csv.empty()) {
    // Parameter count must match the instance; probed on the first sim.
    const auto probe = make_setup<S>(cfg, 0, g);
    shared = load_dataset_csv(cfg.dataset_csv, param_count<S>(probe), 4);
  }

  ExperimentResult result;
  for (int sim = 0; sim < cfg.sims; ++sim) {
    const SimSetup<S> setup = make_setup<S>(cfg, sim, g);
    if (!setup.feasible) {
      ++result.skipped_sims;
      continue;
    }
    Dataset data =
        shared ? *shared
               : gen_artificial(param_count<S>(setup), cfg.n, cfg.offset,
                                sim_seed(cfg, sim, kData), cfg.degrees);
    auto [train_set, test_set] =
        split(data, cfg.split_ratio, sim_seed(cfg, sim, kSplit));
    for (Method method : cfg.methods) {
      result.rows.push_back(
          evaluate_method<S>(cfg, method, sim, setup, train_set, test_set));
    }
  }
  if (result.rows.empty()) {
    throw std::runtime_error("run_experiment: every simulation was skipped");
  }
  return result;
}

}  // namespace

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::knapsack: return "ks";
    case ProblemKind::shortest_path: return "spp";
    case ProblemKind::min_cost_flow: return "mcfp";
    case ProblemKind::vertex_cover: return "mcvc";
  }
  return "?";
}

std::string to_string(Method method) {
  return method == Method::bnl ? "bnl" : "lr";
}

ProblemKind problem_from_string(const std::string& s) {
  if (s == "ks") return ProblemKind::knapsack;
  if (s == "spp") return ProblemKind::shortest_path;
  if (s == "mcfp") return ProblemKind::min_cost_flow;
  if (s == "mcvc") return ProblemKind::vertex_cover;
  throw std::invalid_argument("unknown problem: " + s);
}

Method method_from_string(const std::string& s) {
  if (s == "bnl") return Method::bnl;
  if (s == "lr") return Method::lr;
  throw std::invalid_argument("unknown method: " + s);
}

bool operator==(const ReportRow& a, const ReportRow& b) {
  return a.method == b.method && a.problem == b.problem && a.graph == b.graph &&
         a.n == b.n && a.sim == b.sim && a.test_regrets == b.test_regrets &&
         a.mean_regret == b.mean_regret && a.std_regret == b.std_regret &&
         a.mean_tov == b.mean_tov && a.seconds == b.seconds;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.sims < 1) throw std::invalid_argument("run_experiment: sims >= 1");
  if (cfg.methods.empty()) {
    throw std::invalid_argument("run_experiment: no methods selected");
  }
  Graph g;
  if (cfg.problem != ProblemKind::knapsack) {
    if (cfg.graph_path.empty()) {
      throw std::invalid_argument("run_experiment: graph path required");
    }
    g = load_graph(cfg.graph_path);
  }
  switch (cfg.problem) {
    case ProblemKind::knapsack: return run_impl<Knapsack>(cfg, g);
    case ProblemKind::shortest_path: return run_impl<ShortestPath>(cfg, g);
    case ProblemKind::min_cost_flow: return run_impl<MinCostFlow>(cfg, g);
    case ProblemKind::vertex_cover: return run_impl<VertexCover>(cfg, g);
  }
  throw std::logic_error("run_experiment: unreachable");
}

std::string render_report_csv(const std::vector<ReportRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("render_report_csv: no rows");
  std::ostringstream out;
  out << "method,problem,graph,n,sim,regret,true_opt,seconds\n";
  for (const ReportRow& r : rows) {
    out << r.method << ',' << r.problem << ',' << r.graph << ',' << r.n << ','
        << r.sim << ',' << format_value(r.mean_regret) << ','
        << format_value(r.mean_tov) << ',' << format_value(r.seconds) << "\n";
  }
  // Per-method aggregates across simulations.
  std::vector<std::string> methods;
  for (const ReportRow& r : rows) {
    bool seen = false;
    for (const auto& m : methods) seen = seen || m == r.method;
    if (!seen) methods.push_back(r.method);
  }
  for (const std::string& method : methods) {
    Vec regrets;
    Vec tovs;
    Vec seconds;
    for (const ReportRow& r : rows) {
      if (r.method != method) continue;
      regrets.push_back(r.mean_regret);
      tovs.push_back(r.mean_tov);
      seconds.push_back(r.seconds);
    }
    out << method << ',' << rows[0].problem << ',' << rows[0].graph << ','
        << rows[0].n << ",mean," << format_value(mean_of(regrets)) << ','
        << format_value(mean_of(tovs)) << ',' << format_value(mean_of(seconds))
        << "\n";
    out << method << ',' << rows[0].problem << ',' << rows[0].graph << ','
        << rows[0].n << ",std," << format_value(sample_std(regrets)) << ','
        << format_value(sample_std(tovs)) << ','
        << format_value(sample_std(seconds)) << "\n";
  }
  return out.str();
}

std::string render_report_json(const std::vector<ReportRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("render_report_json: no rows");
  nlohmann::json doc;
  doc["rows"] = nlohmann::json::array();
  for (const ReportRow& r : rows) {
    doc["rows"].push_back({{"method", r.method},
                           {"problem", r.problem},
                           {"graph", r.graph},
                           {"n", r.n},
                           {"sim", r.sim},
                           {"test_regrets", r.test_regrets},
                           {"regret", r.mean_regret},
                           {"regret_std", r.std_regret},
                           {"true_opt", r.mean_tov},
                           {"seconds", r.seconds}});
  }
  return doc.dump(2) + "\n";
}

std::vector<ReportRow> parse_report_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<ReportRow> rows;
  for (const auto& j : doc.at("rows")) {
    ReportRow r;
    r.method = j.at("method").get<std::string>();
    r.problem = j.at("problem").get<std::string>();
    r.graph = j.at("graph").get<std::string>();
    r.n = j.at("n").get<int>();
    r.sim = j.at("sim").get<int>();
    r.test_regrets = j.at("test_regrets").get<Vec>();
    r.mean_regret = j.at("regret").get<double>();
    r.std_regret = j.at("regret_std").get<double>();
    r.mean_tov = j.at("true_opt").get<double>();
    r.seconds = j.at("seconds").get<double>();
    rows.push_back(std::move(r));
  }
  return rows;
}

void emit_report(const std::vector<ReportRow>& rows, const std::string& path,
                 ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  out << (format == ReportFormat::csv ? render_report_csv(rows)
                                      : render_report_json(rows));
  if (!out) throw std::runtime_error("error writing report: " + path);
}

}  // namespace bnl
