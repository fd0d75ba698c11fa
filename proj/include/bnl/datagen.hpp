#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bnl/graph.hpp"
#include "bnl/knapsack.hpp"
#include "bnl/rng.hpp"
#include "bnl/types.hpp"

// Dataset synthesis and file ingestion.
//
// The artificial generator draws, per parameter, a 4-feature tuple
// (a1, a2, a3, a4) with a1 in {1..7}, a2 in {1..30}, a3/a4 uniform on
// [0, 360], and sets the truth to
//     10 sin(a1) sin(a2) + 100 sin(a3) sin(a4) + offset,
// with the trigonometric arguments in radians by default (this convention
// changes every truth value; a degree mode is available). The default
// offset of 200 keeps all truths strictly positive.

namespace bnl {

struct Dataset {
  std::vector<TrainingExample> examples;
  int params = 0;    // t
  int features = 0;  // m
  std::uint64_t seed = 0;
  std::string kind;

  int size() const { return static_cast<int>(examples.size()); }
};

Dataset gen_artificial(int params, int n, double offset, std::uint64_t seed,
                       bool degrees = false);

// Exactly linear ground truth theta = A alpha_star, with positive features;
// pass a positive alpha_star to keep every truth positive.
Dataset gen_linear(int params, int n, const Coefficients& alpha_star,
                   std::uint64_t seed);

// Seeded shuffle, then ceil(ratio * n) examples into the first part.
std::pair<Dataset, Dataset> split(const Dataset& d, double ratio,
                                  std::uint64_t seed);

// Graph CSV: header "u,v" or "u,v,capacity", one edge per row. Vertex ids
// must be dense (every id in 0..max appears on some edge).
Graph load_graph(const std::string& path);

// Dataset CSV: header, then one row per example with 1 + t*(m+1) columns:
// example id, then per parameter its m features followed by its truth.
Dataset load_dataset_csv(const std::string& path, int params, int features);
void save_dataset_csv(const Dataset& d, const std::string& path);

// Knapsack instance CSV: "budget,<W>" line, a header, then one item per row
// ("f0,...,f{m-1},cost"). Returns the skeleton plus the per-item features.
std::pair<KnapsackSkeleton, Matrix> load_knapsack_csv(const std::string& path);

// Capacity sampling and endpoint selection for a flow experiment: integer
// capacities uniform on [10, 50] and a source/sink pair drawn from a rule
// table keyed by graph name ("usanet": sources {1..5}, sinks {20..24},
// intersected with the vertex range; "geant": zero in-degree sources and
// zero out-degree sinks; otherwise any pair with outgoing/incoming edges).
struct FlowInstance {
  Vec capacities;
  int source;
  int sink;
};
FlowInstance gen_flow_instance(const Graph& g, const std::string& graph_name,
                               std::uint64_t seed);

}  // namespace bnl
