#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bnl/datagen.hpp"
#include "bnl/experiment.hpp"
#include "bnl/knapsack.hpp"
#include "bnl/min_cost_flow.hpp"
#include "bnl/shortest_path.hpp"
#include "bnl/trainer.hpp"
#include "bnl/vertex_cover.hpp"

namespace {

using namespace bnl;

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

struct InstanceOptions {
  std::string graph_path;
  std::string instance_path;  // knapsack CSV
  std::optional<int> source;
  std::optional<int> sink;
  double demand = 20.0;
  std::uint64_t seed = 0;
};

// A concrete instance for train/eval: one skeleton per problem kind.
struct BoundInstance {
  ProblemKind kind;
  std::vector<KnapsackSkeleton> ks;
  std::vector<SppSkeleton> spp;
  std::vector<McfpSkeleton> mcfp;
  std::vector<McvcSkeleton> mcvc;
  int params = 0;
};

BoundInstance bind_instance(ProblemKind kind, const InstanceOptions& opt) {
  BoundInstance inst;
  inst.kind = kind;
  switch (kind) {
    case ProblemKind::knapsack: {
      if (opt.instance_path.empty()) {
        throw std::runtime_error("knapsack needs --instance <csv>");
      }
      auto [sk, features] = load_knapsack_csv(opt.instance_path);
      inst.params = static_cast<int>(sk.costs.size());
      inst.ks.push_back(std::move(sk));
      break;
    }
    case ProblemKind::shortest_path: {
      Graph g = load_graph(opt.graph_path);
      if (!opt.source || !opt.sink) {
        throw std::runtime_error("spp needs --source and --sink");
      }
      inst.params = g.edge_count();
      inst.spp.emplace_back(std::move(g), *opt.source, *opt.sink);
      break;
    }
    case ProblemKind::min_cost_flow: {
      Graph g = load_graph(opt.graph_path);
      FlowInstance sampled =
          gen_flow_instance(g, stem_of(opt.graph_path), opt.seed);
      if (g.capacities.empty()) g.capacities = sampled.capacities;
      inst.params = g.edge_count();
      inst.mcfp.emplace_back(std::move(g), opt.source.value_or(sampled.source),
                             opt.sink.value_or(sampled.sink), opt.demand);
      break;
    }
    case ProblemKind::vertex_cover: {
      Graph g = load_graph(opt.graph_path);
      inst.params = g.vertices;
      inst.mcvc.emplace_back(std::move(g));
      break;
    }
  }
  return inst;
}

Coefficients train_instance(const BoundInstance& inst, Method method,
                            const Dataset& data, const TrainConfig& cfg) {
  if (method == Method::lr) return fit_least_squares(data.examples).alpha;
  switch (inst.kind) {
    case ProblemKind::knapsack:
      return coordinate_descent<Knapsack>(inst.ks, data.examples, cfg).alpha;
    case ProblemKind::shortest_path:
      return coordinate_descent<ShortestPath>(inst.spp, data.examples, cfg)
          .alpha;
    case ProblemKind::min_cost_flow:
      return coordinate_descent<MinCostFlow>(inst.mcfp, data.examples, cfg)
          .alpha;
    case ProblemKind::vertex_cover:
      return coordinate_descent<VertexCover>(inst.mcvc, data.examples, cfg)
          .alpha;
  }
  throw std::logic_error("unreachable");
}

double eval_instance(const BoundInstance& inst, const Dataset& data,
                     const Coefficients& alpha) {
  switch (inst.kind) {
    case ProblemKind::knapsack:
      return mean_regret<Knapsack>(inst.ks, data.examples, alpha);
    case ProblemKind::shortest_path:
      return mean_regret<ShortestPath>(inst.spp, data.examples, alpha);
    case ProblemKind::min_cost_flow:
      return mean_regret<MinCostFlow>(inst.mcfp, data.examples, alpha);
    case ProblemKind::vertex_cover:
      return mean_regret<VertexCover>(inst.mcvc, data.examples, alpha);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regret-driven training of linear parameter predictors over "
               "recursive combinatorial solvers, plus a benchmark runner"};
  app.set_config("--config", "", "Read options from an INI file");
  app.require_subcommand(1);

  std::string problem = "mcvc";
  std::string graph_path;
  std::string data_path;
  std::string out_path = "report.csv";
  std::string format = "csv";
  std::string instance_path;
  std::string model_path = "model.json";
  std::vector<std::string> method_names = {"bnl", "lr"};
  std::uint64_t seed = 0;
  int n = 100;
  int sims = 1;
  int params = 4;
  int items = 10;
  int epochs = 5;
  double tol = 1e-6;
  double big_m = 1e12;
  double demand = 20.0;
  double offset = 200.0;
  double ratio = 0.7;
  bool degrees = false;
  bool no_timing = false;
  std::optional<int> source;
  std::optional<int> sink;

  auto* gen = app.add_subcommand("gen-data", "Generate an artificial dataset");
  gen->add_option("--params", params, "Parameters per example")->required();
  gen->add_option("--n", n, "Number of examples");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--offset", offset, "Additive truth offset");
  gen->add_flag("--degrees", degrees, "Trigonometric arguments in degrees");
  gen->add_option("--out", out_path, "Output CSV path")->required();

  auto add_instance_flags = [&](CLI::App* cmd) {
    cmd->add_option("--problem", problem, "ks|spp|mcfp|mcvc");
    cmd->add_option("--graph", graph_path, "Graph CSV (graph problems)");
    cmd->add_option("--instance", instance_path, "Knapsack instance CSV");
    cmd->add_option("--source", source, "Source vertex");
    cmd->add_option("--sink", sink, "Sink vertex");
    cmd->add_option("--demand", demand, "Flow demand");
    cmd->add_option("--seed", seed, "RNG seed");
  };

  auto* train = app.add_subcommand("train", "Fit a model on a dataset");
  add_instance_flags(train);
  train->add_option("--data", data_path, "Dataset CSV")->required();
  train->add_option("--method", method_names,
                    "Methods to fit (bnl and/or lr)");
  train->add_option("--epochs", epochs, "Coordinate-descent epochs");
  train->add_option("--tol", tol, "Convergence tolerance");
  train->add_option("--big-m", big_m, "Out-of-domain penalty");
  train->add_option("--out", model_path, "Model output (JSON)");

  auto* eval = app.add_subcommand("eval", "Mean regret of a model on a dataset");
  add_instance_flags(eval);
  eval->add_option("--data", data_path, "Dataset CSV")->required();
  eval->add_option("--model", model_path, "Model JSON")->required();

  auto* bench = app.add_subcommand("bench", "Run a seeded experiment");
  add_instance_flags(bench);
  bench->add_option("--n", n, "Dataset size per simulation");
  bench->add_option("--sims", sims, "Simulation count");
  bench->add_option("--methods", method_names, "Subset of {bnl, lr}");
  bench->add_option("--data", data_path, "Dataset CSV (otherwise artificial)");
  bench->add_option("--items", items, "Knapsack item count");
  bench->add_option("--epochs", epochs, "Coordinate-descent epochs");
  bench->add_option("--tol", tol, "Convergence tolerance");
  bench->add_option("--big-m", big_m, "Out-of-domain penalty");
  bench->add_option("--offset", offset, "Artificial-truth offset");
  bench->add_option("--ratio", ratio, "Train fraction of each dataset");
  bench->add_flag("--degrees", degrees, "Trigonometric arguments in degrees");
  bench->add_flag("--no-timing", no_timing,
                  "Zero the seconds column (byte-reproducible reports)");
  bench->add_option("--out", out_path, "Report path");
  bench->add_option("--format", format, "csv|json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      save_dataset_csv(gen_artificial(params, n, offset, seed, degrees),
                       out_path);
      std::cout << "wrote " << out_path << "\n";
      return 0;
    }

    InstanceOptions opt{graph_path, instance_path, source, sink, demand, seed};
    const ProblemKind kind = problem_from_string(problem);

    if (train->parsed()) {
      const BoundInstance inst = bind_instance(kind, opt);
      const Dataset data = load_dataset_csv(data_path, inst.params, 4);
      TrainConfig cfg;
      cfg.max_epochs = epochs;
      cfg.tol = tol;
      cfg.big_m = big_m;
      cfg.seed = seed;
      nlohmann::json model;
      model["problem"] = problem;
      for (const std::string& name : method_names) {
        const Method method = method_from_string(name);
        const Coefficients alpha = train_instance(inst, method, data, cfg);
        model["alpha"][name] = alpha;
        std::cout << name << " training regret: "
                  << eval_instance(inst, data, alpha) << "\n";
      }
      std::ofstream out(model_path);
      if (!out) throw std::runtime_error("cannot write " + model_path);
      out << model.dump(2) << "\n";
      std::cout << "wrote " << model_path << "\n";
      return 0;
    }

    if (eval->parsed()) {
      const BoundInstance inst = bind_instance(kind, opt);
      const Dataset data = load_dataset_csv(data_path, inst.params, 4);
      std::ifstream in(model_path);
      if (!in) throw std::runtime_error("cannot read " + model_path);
      nlohmann::json model;
      in >> model;
      for (const auto& [name, alpha_json] : model.at("alpha").items()) {
        const Coefficients alpha = alpha_json.get<Coefficients>();
        std::cout << name << " mean regret: " << eval_instance(inst, data, alpha)
                  << "\n";
      }
      return 0;
    }

    if (bench->parsed()) {
      ExperimentConfig cfg;
      cfg.problem = kind;
      cfg.graph_path = graph_path;
      cfg.graph_name = graph_path.empty() ? problem : stem_of(graph_path);
      cfg.dataset_csv = data_path;
      cfg.n = n;
      cfg.sims = sims;
      cfg.methods.clear();
      for (const std::string& name : method_names) {
        cfg.methods.push_back(method_from_string(name));
      }
      cfg.seed = seed;
      cfg.train.max_epochs = epochs;
      cfg.train.tol = tol;
      cfg.train.big_m = big_m;
      cfg.split_ratio = ratio;
      cfg.demand = demand;
      cfg.items = items;
      cfg.offset = offset;
      cfg.degrees = degrees;
      cfg.record_timing = !no_timing;
      cfg.fixed_source = source;
      cfg.fixed_sink = sink;

      const ExperimentResult result = run_experiment(cfg);
      emit_report(result.rows, out_path,
                  format == "json" ? ReportFormat::json : ReportFormat::csv);
      if (result.skipped_sims > 0) {
        std::cerr << "skipped " << result.skipped_sims
                  << " infeasible simulation(s)\n";
      }
      std::cout << render_report_csv(result.rows);
      std::cout << "wrote " << out_path << "\n";
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
