#pragma once

// Replays a lower_label exchange trace as a sequence of labeled snapshots and
// renders each one as a Graphviz digraph. The vertex being sifted is filled
// gray; the neighbour it will be exchanged with next is filled black.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "odag/labeled_dag.hpp"
#include "odag/reorder.hpp"

namespace odag {

struct SiftSnapshot {
  std::vector<Label> labels;
  VertexId current = 0;
  std::optional<VertexId> next_violating;
};

/// One snapshot right after the label is replaced, then one after every
/// exchange; the last one has no next_violating vertex.
inline std::vector<SiftSnapshot> replay_sift(const LabeledDag& before, VertexId v, Label new_label,
                                             const ExchangeTrace& trace) {
  std::vector<Label> labels(before.labels().begin(), before.labels().end());
  labels[v] = new_label;
  std::vector<SiftSnapshot> out;
  VertexId current = v;
  for (const ExchangeStep& s : trace.steps) {
    out.push_back({labels, current, s.to});
    std::swap(labels[s.from], labels[s.to]);
    current = s.to;
  }
  out.push_back({labels, current, std::nullopt});
  return out;
}

inline void write_dot(std::ostream& os, const LabeledDag& structure, const SiftSnapshot& snap,
                      const std::string& name) {
  os << "digraph " << name << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (VertexId v = 0; v < structure.size(); ++v) {
    os << "  v" << v << " [label=\"" << snap.labels[v] << "\"";
    if (v == snap.current)
      os << ", style=filled, fillcolor=gray80";
    else if (snap.next_violating && v == *snap.next_violating)
      os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  for (const Edge& e : structure.edges()) os << "  v" << e.from << " -> v" << e.to << ";\n";
  os << "}\n";
}

}  // namespace odag
