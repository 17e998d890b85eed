// Sorts a few arrays with HypercubeSort and prints the comparison counts next
// to the worst-case formula.

#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#include "odag/analysis.hpp"
#include "odag/dag_sort.hpp"

int main() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> value(0, 999);

  std::printf("%3s %6s %8s %8s %14s %8s\n", "k", "n", "insert", "remove", "worst-insert", "formula");
  for (unsigned k = 2; k <= 10; k += 2) {
    std::vector<std::int64_t> a(std::size_t{1} << k);
    for (auto& x : a) x = value(rng);
    const odag::SortReport r = odag::hypercube_sort(a);
    const odag::SortReport worst = odag::hypercube_sort(odag::worst_case_input(*r.topology, a.size()));
    std::printf("%3u %6zu %8llu %8llu %14llu %8llu\n", k, a.size(),
                static_cast<unsigned long long>(r.insert_comparisons),
                static_cast<unsigned long long>(r.remove_comparisons),
                static_cast<unsigned long long>(worst.insert_comparisons),
                static_cast<unsigned long long>(odag::hypercube_worst_case_closed(k)));
  }
}
