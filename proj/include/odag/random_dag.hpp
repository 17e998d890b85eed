#pragma once

// Random single-source DAGs and ordered labelings for property tests,
// the `verify` command and benchmarks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "odag/labeled_dag.hpp"

namespace odag {

/// Random single-source DAG on n >= 1 vertices. Vertex ids are a random
/// permutation of the topological ranks, so index order carries no
/// structure. Every non-source vertex gets one random earlier parent, and
/// every other earlier vertex becomes a parent with probability `density`.
template <class Rng>
LabeledDag random_single_source_dag(std::size_t n, double density, Rng& rng) {
  std::vector<VertexId> id(n);
  std::iota(id.begin(), id.end(), VertexId{0});
  std::shuffle(id.begin(), id.end(), rng);
  std::bernoulli_distribution extra(density);
  std::vector<Edge> edges;
  for (std::size_t r = 1; r < n; ++r) {
    std::uniform_int_distribution<std::size_t> pick(0, r - 1);
    const std::size_t parent = pick(rng);
    edges.push_back({id[parent], id[r]});
    for (std::size_t q = 0; q < r; ++q)
      if (q != parent && extra(rng)) edges.push_back({id[q], id[r]});
  }
  return LabeledDag::from_edges(n, edges);
}

/// Overwrites g's labels with a random ordered labeling: each vertex gets the
/// max of its parents' labels plus a small random step (0 allowed, so ties occur).
template <class Rng>
void assign_random_ordered_labels(LabeledDag& g, Rng& rng, std::int64_t max_step = 3) {
  std::vector<std::size_t> indeg(g.size());
  std::vector<VertexId> order;
  for (VertexId v = 0; v < g.size(); ++v) {
    indeg[v] = g.prev(v).size();
    if (indeg[v] == 0) order.push_back(v);
  }
  std::uniform_int_distribution<std::int64_t> base(-20, 20), step(0, max_step);
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId v = order[head];
    std::int64_t l = base(rng);
    if (!g.prev(v).empty()) {
      l = g.label(g.prev(v)[0]).value();
      for (VertexId p : g.prev(v)) l = std::max(l, g.label(p).value());
      l += step(rng);
    }
    g.set_label(v, Label(l));
    for (VertexId w : g.next(v))
      if (--indeg[w] == 0) order.push_back(w);
  }
}

}  // namespace odag
