// A 4x4 Young tableau used directly as a priority queue.

#include <iostream>

#include "odag/pqueue.hpp"
#include "odag/topologies.hpp"

int main() {
  odag::OrderedDagQueue q(odag::build(odag::Topology::young_grid(2, 4)));
  for (std::int64_t x : {42, 7, 19, 3, 88, 23, 5, 61}) q.insert(x);

  const auto [src, min] = q.get_min();
  std::cout << "min at vertex " << src << ": " << min << '\n';

  while (!q.empty()) std::cout << q.remove_min() << ' ';
  std::cout << "\ncomparisons: " << q.counter().count() << '\n';
}
