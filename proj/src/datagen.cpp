#include "bnl/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bnl {

namespace {

constexpr double kDegToRad = 0.017453292519943295;

[[noreturn]] void parse_fail(const std::string& path, int line,
                             const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double parse_number(const std::string& s, const std::string& path, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) parse_fail(path, line, "trailing junk in '" + s + "'");
    return v;
  } catch (const std::invalid_argument&) {
    parse_fail(path, line, "expected a number, got '" + s + "'");
  } catch (const std::out_of_range&) {
    parse_fail(path, line, "number out of range: '" + s + "'");
  }
}

int parse_int(const std::string& s, const std::string& path, int line) {
  const double v = parse_number(s, path, line);
  if (v != std::floor(v)) parse_fail(path, line, "expected an integer");
  return static_cast<int>(v);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Dataset gen_artificial(int params, int n, double offset, std::uint64_t seed,
                       bool degrees) {
  if (n < 1) throw std::invalid_argument("gen_artificial: need n >= 1");
  if (params < 1) throw std::invalid_argument("gen_artificial: need params >= 1");
  Rng rng(seed);
  Dataset d;
  d.params = params;
  d.features = 4;
  d.seed = seed;
  d.kind = "artificial";
  d.examples.reserve(n);
  const double unit = degrees ? kDegToRad : 1.0;
  for (int i = 0; i < n; ++i) {
    TrainingExample ex;
    ex.features = Matrix(params, 4);
    ex.truth.resize(params);
    for (int p = 0; p < params; ++p) {
      const double a1 = rng.uniform_int(1, 7);
      const double a2 = rng.uniform_int(1, 30);
      const double a3 = rng.uniform(0.0, 360.0);
      const double a4 = rng.uniform(0.0, 360.0);
      ex.features.at(p, 0) = a1;
      ex.features.at(p, 1) = a2;
      ex.features.at(p, 2) = a3;
      ex.features.at(p, 3) = a4;
      ex.truth[p] = 10.0 * std::sin(a1 * unit) * std::sin(a2 * unit) +
                    100.0 * std::sin(a3 * unit) * std::sin(a4 * unit) + offset;
    }
    d.examples.push_back(std::move(ex));
  }
  return d;
}

Dataset gen_linear(int params, int n, const Coefficients& alpha_star,
                   std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_linear: need n >= 1");
  if (alpha_star.empty()) {
    throw std::invalid_argument("gen_linear: empty coefficient vector");
  }
  Rng rng(seed);
  Dataset d;
  d.params = params;
  d.features = static_cast<int>(alpha_star.size());
  d.seed = seed;
  d.kind = "linear";
  d.examples.reserve(n);
  for (int i = 0; i < n; ++i) {
    TrainingExample ex;
    ex.features = Matrix(params, d.features);
    for (int p = 0; p < params; ++p) {
      for (int f = 0; f < d.features; ++f) {
        ex.features.at(p, f) = rng.uniform(0.5, 2.0);
      }
    }
    ex.truth = matvec(ex.features, alpha_star);
    d.examples.push_back(std::move(ex));
  }
  return d;
}

std::pair<Dataset, Dataset> split(const Dataset& d, double ratio,
                                  std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("split: ratio must lie in (0, 1)");
  }
  std::vector<int> order(d.examples.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);
  const int cut = static_cast<int>(
      std::ceil(ratio * static_cast<double>(d.examples.size())));
  Dataset train = d;
  Dataset test = d;
  train.examples.clear();
  test.examples.clear();
  for (std::size_t i = 0; i < order.size(); ++i) {
    (static_cast<int>(i) < cut ? train : test)
        .examples.push_back(d.examples[order[i]]);
  }
  return {std::move(train), std::move(test)};
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) parse_fail(path, 1, "missing header");
  ++lineno;
  auto header = split_csv_line(line);
  bool with_capacity = false;
  if (header.size() == 3 && header[0] == "u" && header[1] == "v" &&
      header[2] == "capacity") {
    with_capacity = true;
  } else if (!(header.size() == 2 && header[0] == "u" && header[1] == "v")) {
    parse_fail(path, 1, "expected header 'u,v' or 'u,v,capacity'");
  }

  Graph g;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      parse_fail(path, lineno, "wrong column count");
    }
    GraphEdge e{parse_int(fields[0], path, lineno),
                parse_int(fields[1], path, lineno)};
    if (e.u < 0 || e.v < 0) parse_fail(path, lineno, "negative vertex id");
    g.edges.push_back(e);
    if (with_capacity) {
      g.capacities.push_back(parse_number(fields[2], path, lineno));
    }
    max_id = std::max({max_id, e.u, e.v});
  }
  g.vertices = max_id + 1;
  try {
    validate_graph(g);
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(path + ": " + err.what());
  }
  // Dense ids: every id in 0..max must occur on some edge.
  std::vector<bool> present(g.vertices, false);
  for (const GraphEdge& e : g.edges) present[e.u] = present[e.v] = true;
  for (int v = 0; v < g.vertices; ++v) {
    if (!present[v]) {
      throw std::runtime_error(path + ": vertex id " + std::to_string(v) +
                               " missing from the edge list");
    }
  }
  return g;
}

Dataset load_dataset_csv(const std::string& path, int params, int features) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  const std::size_t expect = 1 + static_cast<std::size_t>(params) * (features + 1);
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) parse_fail(path, 1, "missing header");
  ++lineno;
  if (split_csv_line(line).size() != expect) {
    parse_fail(path, 1, "header has wrong column count");
  }
  Dataset d;
  d.params = params;
  d.features = features;
  d.kind = "csv";
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != expect) parse_fail(path, lineno, "wrong column count");
    TrainingExample ex;
    ex.features = Matrix(params, features);
    ex.truth.resize(params);
    std::size_t col = 1;
    for (int p = 0; p < params; ++p) {
      for (int f = 0; f < features; ++f) {
        ex.features.at(p, f) = parse_number(fields[col++], path, lineno);
      }
      ex.truth[p] = parse_number(fields[col++], path, lineno);
    }
    d.examples.push_back(std::move(ex));
  }
  if (d.examples.empty()) parse_fail(path, lineno, "no data rows");
  return d;
}

void save_dataset_csv(const Dataset& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dataset file: " + path);
  out << "example";
  for (int p = 0; p < d.params; ++p) {
    for (int f = 0; f < d.features; ++f) out << ",a" << p << "_" << f;
    out << ",theta" << p;
  }
  out << "\n";
  for (std::size_t i = 0; i < d.examples.size(); ++i) {
    out << i;
    const TrainingExample& ex = d.examples[i];
    for (int p = 0; p < d.params; ++p) {
      for (int f = 0; f < d.features; ++f) {
        out << "," << format_double(ex.features.at(p, f));
      }
      out << "," << format_double(ex.truth[p]);
    }
    out << "\n";
  }
}

std::pair<KnapsackSkeleton, Matrix> load_knapsack_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open knapsack file: " + path);
  std::string line;
  if (!std::getline(in, line)) parse_fail(path, 1, "missing budget line");
  auto budget_fields = split_csv_line(line);
  if (budget_fields.size() != 2 || budget_fields[0] != "budget") {
    parse_fail(path, 1, "expected 'budget,<value>'");
  }
  KnapsackSkeleton sk;
  sk.budget = parse_number(budget_fields[1], path, 1);
  int lineno = 1;
  if (!std::getline(in, line)) parse_fail(path, 2, "missing header");
  ++lineno;
  const auto header = split_csv_line(line);
  if (header.size() < 2 || header.back() != "cost") {
    parse_fail(path, 2, "expected feature columns followed by 'cost'");
  }
  const int m = static_cast<int>(header.size()) - 1;
  std::vector<Vec> feature_rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      parse_fail(path, lineno, "wrong column count");
    }
    Vec row(m);
    for (int f = 0; f < m; ++f) row[f] = parse_number(fields[f], path, lineno);
    feature_rows.push_back(std::move(row));
    sk.costs.push_back(parse_number(fields.back(), path, lineno));
  }
  if (feature_rows.empty()) parse_fail(path, lineno, "no items");
  Matrix features(static_cast<int>(feature_rows.size()), m);
  for (std::size_t r = 0; r < feature_rows.size(); ++r) {
    for (int f = 0; f < m; ++f) {
      features.at(static_cast<int>(r), f) = feature_rows[r][f];
    }
  }
  return {std::move(sk), std::move(features)};
}

FlowInstance gen_flow_instance(const Graph& g, const std::string& graph_name,
                               std::uint64_t seed) {
  Rng rng(seed);
  FlowInstance inst;
  inst.capacities.resize(g.edges.size());
  for (double& c : inst.capacities) c = rng.uniform_int(10, 50);

  std::vector<int> sources;
  std::vector<int> sinks;
  if (graph_name == "usanet") {
    for (int v : {1, 2, 3, 4, 5}) {
      if (v < g.vertices) sources.push_back(v);
    }
    for (int v : {20, 21, 22, 23, 24}) {
      if (v < g.vertices) sinks.push_back(v);
    }
  } else if (graph_name == "geant") {
    const auto in_deg = in_degrees(g);
    const auto out_deg = out_degrees(g);
    for (int v = 0; v < g.vertices; ++v) {
      if (in_deg[v] == 0) sources.push_back(v);
      if (out_deg[v] == 0) sinks.push_back(v);
    }
  } else {
    const auto in_deg = in_degrees(g);
    const auto out_deg = out_degrees(g);
    for (int v = 0; v < g.vertices; ++v) {
      if (out_deg[v] > 0) sources.push_back(v);
      if (in_deg[v] > 0) sinks.push_back(v);
    }
  }
  if (sources.empty() || sinks.empty()) {
    throw std::runtime_error("gen_flow_instance: no source/sink candidates");
  }
  inst.source = sources[rng.next() % sources.size()];
  for (int attempt = 0;; ++attempt) {
    inst.sink = sinks[rng.next() % sinks.size()];
    if (inst.sink != inst.source) break;
    if (attempt > 64) {
      throw std::runtime_error("gen_flow_instance: cannot pick sink != source");
    }
  }
  return inst;
}

}  // namespace bnl
