#include "dsparsa/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dsparsa/errors.hpp"
#include "dsparsa/random.hpp"

namespace dsparsa {

Digraph::Digraph(int node_count, const std::vector<std::pair<int, int>>& edges)
    : node_count_(node_count) {
  if (node_count < 1) {
    throw ParameterError("Digraph: node_count must be >= 1");
  }
  in_.resize(node_count);
  out_.resize(node_count);
  for (int v = 0; v < node_count; ++v) {
    in_[v].push_back(v);
    out_[v].push_back(v);
  }
  for (const auto& [from, to] : edges) {
    if (from < 0 || from >= node_count || to < 0 || to >= node_count) {
      throw ParameterError("Digraph: edge (" + std::to_string(from) + ", " +
                           std::to_string(to) + ") out of range");
    }
    if (from == to) continue;  // self-neighborhoods are implicit
    if (has_edge(from, to)) continue;
    edges_.emplace_back(from, to);
    out_[from].push_back(to);
    in_[to].push_back(from);
  }
}

bool Digraph::has_edge(int from, int to) const {
  if (from == to) return false;
  const auto& nbrs = out_.at(from);
  return std::find(nbrs.begin(), nbrs.end(), to) != nbrs.end();
}

namespace {

// Nodes reachable from 0 following the supplied neighbor lists.
int reachable_count(const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

bool Digraph::is_strongly_connected() const {
  if (node_count_ == 1) return true;
  return reachable_count(out_) == node_count_ && reachable_count(in_) == node_count_;
}

GraphSchedule::GraphSchedule(int node_count, int window, Generator generator)
    : node_count_(node_count), window_(window), generator_(std::move(generator)) {
  if (node_count < 1) throw ParameterError("GraphSchedule: node_count must be >= 1");
  if (window < 1) throw ParameterError("GraphSchedule: window must be >= 1");
  if (!generator_) throw ParameterError("GraphSchedule: generator must be callable");
}

Digraph GraphSchedule::at(int round) const {
  if (round < 0) throw ParameterError("GraphSchedule: round must be >= 0");
  Digraph g = generator_(round);
  if (g.node_count() != node_count_) {
    throw ConfigurationError("GraphSchedule: generator returned wrong node count");
  }
  return g;
}

GraphSchedule generate_schedule(int node_count, int out_degree, std::uint64_t seed) {
  if (node_count < 1) throw ParameterError("generate_schedule: node_count must be >= 1");
  if (node_count > 1 && (out_degree < 1 || out_degree >= node_count)) {
    throw ParameterError("generate_schedule: out_degree must lie in [1, node_count)");
  }
  auto generator = [node_count, out_degree, seed](int round) -> Digraph {
    if (node_count == 1) return Digraph(1, {});
    auto rng = make_rng(seed, static_cast<std::uint64_t>(round));
    std::vector<int> perm(node_count);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(node_count) * out_degree);
    std::vector<int> succ(node_count);
    for (int k = 0; k < node_count; ++k) {
      int from = perm[k];
      int to = perm[(k + 1) % node_count];
      succ[from] = to;
      edges.emplace_back(from, to);
    }
    std::uniform_int_distribution<int> pick(0, node_count - 1);
    std::vector<int> taken;
    for (int j = 0; j < node_count; ++j) {
      taken.assign({j, succ[j]});
      for (int e = 1; e < out_degree; ++e) {
        int t;
        do {
          t = pick(rng);
        } while (std::find(taken.begin(), taken.end(), t) != taken.end());
        taken.push_back(t);
        edges.emplace_back(j, t);
      }
    }
    return Digraph(node_count, edges);
  };
  return GraphSchedule(node_count, 1, std::move(generator));
}

bool is_b_strongly_connected(const GraphSchedule& schedule, int window, int horizon) {
  if (window < 1) throw ParameterError("is_b_strongly_connected: window must be >= 1");
  if (horizon < window) {
    throw ParameterError("is_b_strongly_connected: horizon must be >= window");
  }
  for (int start = 0; start + window <= horizon; start += window) {
    std::vector<std::pair<int, int>> merged;
    for (int n = start; n < start + window; ++n) {
      const Digraph g = schedule.at(n);
      merged.insert(merged.end(), g.edges().begin(), g.edges().end());
    }
    if (!Digraph(schedule.node_count(), merged).is_strongly_connected()) {
      return false;
    }
  }
  return true;
}

Eigen::MatrixXd build_weights(const Digraph& graph) {
  const int n = graph.node_count();
  Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const double w = 1.0 / graph.out_degree(j);
    for (int i : graph.out_neighbors(j)) {
      weights(i, j) = w;
    }
  }
  return weights;
}

}  // namespace dsparsa
