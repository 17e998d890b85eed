#pragma once

// Mid-sift loop invariants, usable as sift observers in tests and in the
// `verify` command. Each check is O(|E|).
//
// While sifting toward the source:
//   (1) every bad edge enters `current`;
//   (2) label(p) <= label(q) for every previous neighbour p and next
//       neighbour q of `current`.
// While sifting toward the sinks, (1) becomes "every bad edge leaves
// `current`" and (2) is unchanged.

#include <cstdint>

#include "odag/labeled_dag.hpp"

namespace odag {

template <class G>
bool bad_edges_enter_only(const G& g, VertexId current) {
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId w : g.next(u))
      if (g.label(w) < g.label(u) && w != current) return false;
  return true;
}

template <class G>
bool bad_edges_leave_only(const G& g, VertexId current) {
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId w : g.next(u))
      if (g.label(w) < g.label(u) && u != current) return false;
  return true;
}

template <class G>
bool neighbours_straddle(const G& g, VertexId current) {
  for (VertexId p : g.prev(current))
    for (VertexId q : g.next(current))
      if (g.label(q) < g.label(p)) return false;
  return true;
}

/// Observer that records invariant violations for a sift toward the source
/// (`toward_source = true`) or toward the sinks.
struct LoopInvariantChecker {
  bool toward_source = true;
  std::uint64_t iterations = 0;
  std::uint64_t part1_failures = 0;
  std::uint64_t part2_failures = 0;

  template <class G>
  void operator()(const G& g, VertexId current) {
    ++iterations;
    bool part1 = toward_source ? bad_edges_enter_only(g, current) : bad_edges_leave_only(g, current);
    if (!part1) ++part1_failures;
    if (!neighbours_straddle(g, current)) ++part2_failures;
  }

  bool ok() const noexcept { return part1_failures == 0 && part2_failures == 0; }
};

}  // namespace odag
