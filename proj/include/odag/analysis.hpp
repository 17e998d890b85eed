#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "odag/error.hpp"
#include "odag/labeled_dag.hpp"

namespace odag {

/// Structural metrics of a single-source DAG.
struct DagStats {
  std::size_t n = 0;
  std::size_t longest_path = 0;  // edges on the longest path starting at the source
  std::size_t max_in_degree = 0;
  std::size_t max_out_degree = 0;

  friend bool operator==(const DagStats&, const DagStats&) = default;
};

inline DagStats stats(const LabeledDag& g) {
  if (!g.single_source()) throw Error(ErrorCode::MultipleSources, "stats need a single-source DAG");
  DagStats s;
  s.n = g.size();
  std::vector<std::size_t> indeg(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    indeg[v] = g.prev(v).size();
    s.max_in_degree = std::max(s.max_in_degree, indeg[v]);
    s.max_out_degree = std::max(s.max_out_degree, g.next(v).size());
  }
  // Longest path by DP over a topological order (Kahn). Every vertex is
  // reachable from the single source, so depth[source] = 0 seeds all of them.
  std::vector<std::size_t> depth(g.size(), 0);
  std::vector<VertexId> order{g.source()};
  order.reserve(g.size());
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId u = order[head];
    s.longest_path = std::max(s.longest_path, depth[u]);
    for (VertexId w : g.next(u)) {
      depth[w] = std::max(depth[w], depth[u] + 1);
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  return s;
}

namespace detail {

inline std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "comparison count exceeds 64 bits");
  return r;
}

inline std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "comparison count exceeds 64 bits");
  return r;
}

inline std::uint64_t pow2_checked(unsigned e) {
  if (e >= 64) throw Error(ErrorCode::Overflow, "2^k exceeds 64 bits");
  return std::uint64_t{1} << e;
}

}  // namespace detail

/// Upper bound n * L * (D_in + D_out) on the comparisons of a full DAG sort.
inline std::uint64_t general_bound(const DagStats& s) {
  using detail::mul_checked;
  return mul_checked(mul_checked(s.n, s.longest_path), s.max_in_degree + s.max_out_degree);
}

/// Worst-case insert-phase comparisons on the k-dimensional hypercube,
/// closed form (k 2^k + k (k - 1) 2^(k-2)) / 2.
inline std::uint64_t hypercube_worst_case_closed(unsigned k) {
  using namespace detail;
  std::uint64_t linear = mul_checked(k, pow2_checked(k));
  std::uint64_t quadratic = k >= 2 ? mul_checked(mul_checked(k, k - 1), pow2_checked(k - 2)) : 0;
  return add_checked(linear, quadratic) / 2;
}

/// Same quantity as the binomial sum over cardinalities i of C(k, i) * i (i + 1) / 2.
inline std::uint64_t hypercube_worst_case_sum(unsigned k) {
  using namespace detail;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(k, i)
  for (unsigned i = 0; i <= k; ++i) {
    if (i > 0) binom = static_cast<std::uint64_t>(static_cast<unsigned __int128>(binom) * (k - i + 1) / i);
    std::uint64_t per_vertex = static_cast<std::uint64_t>(i) * (i + 1) / 2;
    total = add_checked(total, mul_checked(binom, per_vertex));
  }
  return total;
}

struct CorollaryCheck {
  double lhs = 0;  // (1/n) log2(n!)
  double rhs = 0;  // L (D_in + D_out)
  bool ok = false;
};

/// (1/n) log2(n!) computed by exact summation of log2(i).
inline double mean_log2_factorial(std::size_t n) {
  double sum = 0;
  for (std::size_t i = 2; i <= n; ++i) sum += std::log2(static_cast<double>(i));
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

/// Checks (1/n) log2(n!) <= L (D_in + D_out). Requires n >= 2.
inline CorollaryCheck corollary_holds(const DagStats& s) {
  if (s.n < 2) throw Error(ErrorCode::InvalidArgument, "corollary needs n >= 2");
  CorollaryCheck c;
  c.lhs = mean_log2_factorial(s.n);
  c.rhs = static_cast<double>(s.longest_path) * static_cast<double>(s.max_in_degree + s.max_out_degree);
  c.ok = c.lhs <= c.rhs;
  return c;
}

}  // namespace odag
