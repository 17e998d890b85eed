#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "odag/error.hpp"
#include "odag/labeled_dag.hpp"
#include "odag/pqueue.hpp"
#include "odag/topologies.hpp"

namespace odag {

struct SortReport {
  std::vector<std::int64_t> output;
  std::uint64_t insert_comparisons = 0;
  std::uint64_t remove_comparisons = 0;
  std::uint64_t total_comparisons = 0;
  std::optional<Topology> topology;  // empty for caller-supplied DAGs
  std::size_t n_elements = 0;
};

namespace detail {

inline SortReport run_queue_sort(OrderedDagQueue queue, std::span<const std::int64_t> a) {
  SortReport r;
  r.n_elements = a.size();
  for (std::int64_t x : a) queue.insert(Label(x));
  r.insert_comparisons = queue.counter().count();
  queue.counter().reset();
  r.output.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.output.push_back(queue.remove_min().value());
  r.remove_comparisons = queue.counter().count();
  r.total_comparisons = r.insert_comparisons + r.remove_comparisons;
  return r;
}

}  // namespace detail

/// Inserts every element into an ordered-DAG queue over g, then extracts the
/// minimum |a| times. Requires |a| == number of vertices of g.
inline SortReport dag_sort(const LabeledDag& g, std::span<const std::int64_t> a) {
  if (a.size() != g.size())
    throw Error(ErrorCode::SizeMismatch,
                "array has " + std::to_string(a.size()) + " elements, DAG has " + std::to_string(g.size()) + " vertices");
  return detail::run_queue_sort(OrderedDagQueue(g), a);
}

/// dag_sort over a generated topology, using its natural insertion order.
inline SortReport dag_sort(const Topology& t, std::span<const std::int64_t> a) {
  LabeledDag g = build(t);
  if (a.size() != g.size())
    throw Error(ErrorCode::SizeMismatch,
                "array has " + std::to_string(a.size()) + " elements, " + to_string(t) + " has " +
                    std::to_string(g.size()) + " vertices");
  VertexOrder order = natural_order(t, g);
  SortReport r = detail::run_queue_sort(OrderedDagQueue(std::move(g), std::move(order)), a);
  r.topology = t;
  return r;
}

/// Smallest k with 2^k >= max(n, 1).
inline unsigned hypercube_dimension_for(std::size_t n) noexcept {
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

/// dag_sort on the smallest hypercube holding |a| elements. Vertices beyond
/// |a| stay at infinity and are never extracted.
inline SortReport hypercube_sort(std::span<const std::int64_t> a) {
  const Topology t = Topology::hypercube(hypercube_dimension_for(a.size()));
  SortReport r = detail::run_queue_sort(OrderedDagQueue(build(t), hypercube_order(t.dimensions)), a);
  r.topology = t;
  return r;
}

/// n, n-1, ..., 1: each insert is the new minimum and sifts all the way to the source.
inline std::vector<std::int64_t> worst_case_input([[maybe_unused]] const Topology& t, std::size_t n) {
  std::vector<std::int64_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::int64_t>(n - i);
  return a;
}

}  // namespace odag
