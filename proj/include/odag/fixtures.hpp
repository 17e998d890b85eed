#pragma once

// The twelve-vertex ordered example DAG used throughout the tests, and the
// result of lowering its 12-labeled vertex to 3.
//
// Vertices 0 and 1 both have in-degree 0, so this DAG is built with
// from_edges_multi_source_unchecked.

#include <array>
#include <cstdint>

#include "odag/labeled_dag.hpp"
#include "odag/reorder.hpp"

namespace odag::fixtures {

inline constexpr std::size_t kExampleVertices = 12;

inline constexpr std::array<Edge, 18> kExampleEdges{{
    {0, 2}, {1, 2}, {1, 8}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 5}, {5, 6},
    {5, 7}, {5, 8}, {6, 7}, {6, 9}, {7, 9}, {8, 7}, {8, 9}, {9, 10}, {9, 11},
}};

inline constexpr std::array<std::int64_t, 12> kExampleLabels{1, 2, 4, 6, 6, 8, 8, 10, 9, 12, 14, 16};

inline constexpr VertexId kLoweredVertex = 9;  // holds 12
inline constexpr std::int64_t kLoweredTo = 3;

inline constexpr std::array<std::int64_t, 12> kLoweredLabels{1, 2, 3, 4, 6, 6, 8, 9, 8, 10, 14, 16};

inline LabeledDag example_dag() {
  LabeledDag g = LabeledDag::from_edges_multi_source_unchecked(kExampleVertices, kExampleEdges);
  for (VertexId v = 0; v < kExampleVertices; ++v) g.set_label(v, Label(kExampleLabels[v]));
  return g;
}

/// Exchange sequence of lowering vertex 9 from 12 to 3: the label moves
/// through the vertices holding 10, 9, 8, 6 and 4.
inline ExchangeTrace example_lowering_trace() {
  return ExchangeTrace{{{9, 7, Label(10)}, {7, 8, Label(9)}, {8, 5, Label(8)}, {5, 3, Label(6)}, {3, 2, Label(4)}},
                       2};
}

}  // namespace odag::fixtures
