#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace dsparsa {

// Directed communication graph on nodes [0, I). An edge (j, i) means node j
// transmits to node i. Self-loops are never stored; neighborhood queries
// always include the node itself.
class Digraph {
 public:
  Digraph(int node_count, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // In-neighbors of i (nodes transmitting to i), including i itself.
  const std::vector<int>& in_neighbors(int i) const { return in_.at(i); }
  // Out-neighbors of j (nodes j transmits to), including j itself.
  const std::vector<int>& out_neighbors(int j) const { return out_.at(j); }
  // Out-degree counting the node itself.
  int out_degree(int j) const { return static_cast<int>(out_.at(j).size()); }

  bool has_edge(int from, int to) const;
  bool is_strongly_connected() const;

 private:
  int node_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
};

// Deterministic time-varying digraph sequence. The generator must be a pure
// function of the round index so schedules can be replayed and shared across
// concurrent readers.
class GraphSchedule {
 public:
  using Generator = std::function<Digraph(int round)>;

  GraphSchedule(int node_count, int window, Generator generator);

  Digraph at(int round) const;
  int node_count() const { return node_count_; }
  // Connectivity window: unions of this many consecutive rounds are strongly
  // connected by construction.
  int window() const { return window_; }

 private:
  int node_count_ = 0;
  int window_ = 1;
  Generator generator_;
};

// Random schedule in which every round-graph is strongly connected: a random
// Hamiltonian cycle through all nodes plus out_degree-1 further distinct
// random out-edges per node. Pure function of (round, seed).
GraphSchedule generate_schedule(int node_count, int out_degree, std::uint64_t seed);

// True iff the union graph of every disjoint length-`window` block of rounds
// within [0, horizon) is strongly connected.
bool is_b_strongly_connected(const GraphSchedule& schedule, int window, int horizon);

// Column-stochastic push-sum weights: a_ij = 1/d_j if (j,i) is an edge or
// i == j, with d_j the out-degree of j counting j itself.
Eigen::MatrixXd build_weights(const Digraph& graph);

}  // namespace dsparsa
