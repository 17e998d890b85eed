#pragma once

// Generators for the standard DAG families and their insertion orders.
//
//   Star(n)          source 0 with an edge to each of 1..n-1 (selection sort)
//   Path(n)          i -> i+1 (insertion sort)
//   YoungGrid(k, s)  [0, s)^k, row-major, edge when one coordinate grows by 1
//   Hypercube(k)     subsets of a k-set as bitmasks, edge u -> u | (1 << b)

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "odag/error.hpp"
#include "odag/labeled_dag.hpp"

namespace odag {

enum class TopologyKind { Star, Path, YoungGrid, Hypercube };

struct Topology {
  TopologyKind kind = TopologyKind::Path;
  std::size_t n = 1;          // Star, Path
  unsigned dimensions = 0;    // YoungGrid, Hypercube
  std::size_t side = 1;       // YoungGrid

  static Topology star(std::size_t n) { return {TopologyKind::Star, n, 0, 1}; }
  static Topology path(std::size_t n) { return {TopologyKind::Path, n, 0, 1}; }
  static Topology young_grid(unsigned k, std::size_t s) { return {TopologyKind::YoungGrid, 0, k, s}; }
  static Topology hypercube(unsigned k) { return {TopologyKind::Hypercube, 0, k, 1}; }

  friend bool operator==(const Topology&, const Topology&) = default;
};

namespace detail {

inline std::size_t checked_pow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base)
      throw Error(ErrorCode::Overflow, "vertex count exceeds the platform word");
    r *= base;
  }
  return r;
}

}  // namespace detail

/// Number of vertices of the topology. Throws Overflow when it does not fit.
inline std::size_t vertex_count(const Topology& t) {
  switch (t.kind) {
    case TopologyKind::Star:
    case TopologyKind::Path: return t.n;
    case TopologyKind::YoungGrid: return detail::checked_pow(t.side, t.dimensions);
    case TopologyKind::Hypercube:
      if (t.dimensions >= std::numeric_limits<std::size_t>::digits)
        throw Error(ErrorCode::Overflow, "2^k exceeds the platform word");
      return std::size_t{1} << t.dimensions;
  }
  return 0;
}

/// "star:N", "path:N", "grid:K:S", "hypercube:K".
inline std::string to_string(const Topology& t) {
  switch (t.kind) {
    case TopologyKind::Star: return "star:" + std::to_string(t.n);
    case TopologyKind::Path: return "path:" + std::to_string(t.n);
    case TopologyKind::YoungGrid: return "grid:" + std::to_string(t.dimensions) + ":" + std::to_string(t.side);
    case TopologyKind::Hypercube: return "hypercube:" + std::to_string(t.dimensions);
  }
  return {};
}

inline Topology parse_topology(std::string_view spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = spec.find(':', start);
    parts.emplace_back(spec.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::Parse, "bad number '" + s + "' in topology '" + std::string(spec) + "'");
    return std::stoull(s);
  };
  const std::string& name = parts[0];
  Topology t;
  if (name == "star" && parts.size() == 2) {
    t = Topology::star(number(parts[1]));
  } else if (name == "path" && parts.size() == 2) {
    t = Topology::path(number(parts[1]));
  } else if (name == "grid" && parts.size() == 3) {
    t = Topology::young_grid(static_cast<unsigned>(number(parts[1])), number(parts[2]));
  } else if (name == "hypercube" && parts.size() == 2) {
    t = Topology::hypercube(static_cast<unsigned>(number(parts[1])));
  } else {
    throw Error(ErrorCode::Parse, "unknown topology '" + std::string(spec) + "'");
  }
  if ((t.kind == TopologyKind::Star || t.kind == TopologyKind::Path) && t.n == 0)
    throw Error(ErrorCode::InvalidArgument, "topology needs at least one vertex");
  if (t.kind == TopologyKind::YoungGrid && t.side == 0)
    throw Error(ErrorCode::InvalidArgument, "grid side must be at least 1");
  return t;
}

/// Materializes the topology as a single-source DAG with all labels infinite.
inline LabeledDag build(const Topology& t) {
  const std::size_t n = vertex_count(t);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "topology needs at least one vertex");
  std::vector<Edge> edges;
  switch (t.kind) {
    case TopologyKind::Star:
      edges.reserve(n - 1);
      for (VertexId v = 1; v < n; ++v) edges.push_back({0, v});
      break;
    case TopologyKind::Path:
      edges.reserve(n - 1);
      for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
    case TopologyKind::YoungGrid: {
      // Coordinate i (0 = most significant) has stride s^(k-1-i).
      const unsigned k = t.dimensions;
      const std::size_t s = t.side;
      std::vector<std::size_t> stride(k);
      for (unsigned i = 0; i < k; ++i) stride[i] = detail::checked_pow(s, k - 1 - i);
      for (VertexId v = 0; v < n; ++v)
        for (unsigned i = 0; i < k; ++i)
          if ((v / stride[i]) % s + 1 < s) edges.push_back({v, v + stride[i]});
      break;
    }
    case TopologyKind::Hypercube:
      for (VertexId v = 0; v < n; ++v)
        for (unsigned b = 0; b < t.dimensions; ++b)
          if (!(v & (VertexId{1} << b))) edges.push_back({v, v | (VertexId{1} << b)});
      break;
  }
  return LabeledDag::from_edges(n, edges);
}

/// Smallest y > x with the same popcount. Requires x > 0; the caller bounds the result.
constexpr std::uint64_t next_same_popcount(std::uint64_t x) noexcept {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  return ripple | (((x ^ ripple) >> 2) / lowest);
}

/// Subset size of a hypercube vertex.
constexpr unsigned cardinality(VertexId v) noexcept { return static_cast<unsigned>(std::popcount(v)); }

/// Stateful insertion cursor: yields every vertex exactly once, source first,
/// in nondecreasing distance from the source.
class VertexOrder {
 public:
  /// Breadth-first from the source, expanding neighbours in ascending VertexId.
  static VertexOrder bfs(const LabeledDag& g) {
    if (!g.single_source()) throw Error(ErrorCode::MultipleSources, "BFS order needs a single source");
    std::vector<VertexId> order;
    order.reserve(g.size());
    std::vector<bool> seen(g.size(), false);
    order.push_back(g.source());
    seen[g.source()] = true;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (VertexId w : g.next(order[head]))
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
    VertexOrder o;
    o.state_ = Listed{std::move(order), 0};
    return o;
  }

  /// Hypercube vertices by ascending popcount, ascending value within a
  /// popcount. O(1) time and memory per call.
  static VertexOrder hypercube(unsigned k) {
    if (k >= 64) throw Error(ErrorCode::Overflow, "2^k exceeds the platform word");
    VertexOrder o;
    o.state_ = Subsets{k, 0, 0, 0};
    return o;
  }

  std::size_t size() const noexcept {
    if (auto* l = std::get_if<Listed>(&state_)) return l->order.size();
    return std::size_t{1} << std::get<Subsets>(state_).k;
  }
  std::size_t yielded() const noexcept {
    if (auto* l = std::get_if<Listed>(&state_)) return l->pos;
    return std::get<Subsets>(state_).yielded;
  }
  bool exhausted() const noexcept { return yielded() == size(); }

  VertexId next() {
    if (exhausted()) throw Error(ErrorCode::Exhausted, "vertex order exhausted");
    if (auto* l = std::get_if<Listed>(&state_)) return l->order[l->pos++];
    auto& s = std::get<Subsets>(state_);
    if (s.yielded++ == 0) return 0;
    // Last subset of the current popcount is the top `m` bits set; move to m + 1.
    const std::uint64_t top = ((std::uint64_t{1} << s.popcount) - 1) << (s.k - s.popcount);
    if (s.popcount == 0 || s.mask == top) {
      ++s.popcount;
      s.mask = (std::uint64_t{1} << s.popcount) - 1;
    } else {
      s.mask = next_same_popcount(s.mask);
    }
    return static_cast<VertexId>(s.mask);
  }

 private:
  struct Listed {
    std::vector<VertexId> order;
    std::size_t pos;
  };
  struct Subsets {
    unsigned k;
    unsigned popcount;
    std::uint64_t mask;
    std::size_t yielded;
  };

  VertexOrder() = default;
  std::variant<Listed, Subsets> state_;
};

inline VertexOrder bfs_order(const LabeledDag& g) { return VertexOrder::bfs(g); }
inline VertexOrder hypercube_order(unsigned k) { return VertexOrder::hypercube(k); }

/// Insertion order the library uses for a topology: the O(1) subset cursor
/// for hypercubes, BFS otherwise.
inline VertexOrder natural_order(const Topology& t, const LabeledDag& g) {
  return t.kind == TopologyKind::Hypercube ? hypercube_order(t.dimensions) : bfs_order(g);
}

}  // namespace odag
