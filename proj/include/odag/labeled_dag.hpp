#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "odag/error.hpp"
#include "odag/label.hpp"

namespace odag {

/// Dense vertex index in [0, n). For hypercube DAGs it is also the subset bitmask.
using VertexId = std::size_t;

struct Edge {
  VertexId from;
  VertexId to;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Static DAG structure plus a mutable label per vertex.
///
/// Previous- and next-neighbour lists are stored sorted by VertexId, which
/// makes every tie-break in the sift procedures deterministic. Structure
/// never changes after construction; only labels do.
class LabeledDag {
 public:
  using label_type = Label;

  /// Builds a single-source DAG with every label set to infinity.
  static LabeledDag from_edges(std::size_t n, std::span<const Edge> edges) {
    LabeledDag g(n, edges);
    if (g.source_count_ != 1) {
      throw Error(ErrorCode::MultipleSources,
                  std::to_string(g.source_count_) + " vertices with in-degree 0, expected exactly 1");
    }
    g.check_reachable();
    return g;
  }

  /// Like from_edges but tolerates several in-degree-0 vertices; source() is the lowest-indexed one.
  static LabeledDag from_edges_multi_source_unchecked(std::size_t n, std::span<const Edge> edges) {
    return LabeledDag(n, edges);
  }

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return next_ids_.size(); }
  VertexId source() const noexcept { return source_; }
  bool single_source() const noexcept { return source_count_ == 1; }

  std::span<const VertexId> prev(VertexId v) const noexcept {
    return {prev_ids_.data() + prev_off_[v], prev_ids_.data() + prev_off_[v + 1]};
  }
  std::span<const VertexId> next(VertexId v) const noexcept {
    return {next_ids_.data() + next_off_[v], next_ids_.data() + next_off_[v + 1]};
  }

  const Label& label(VertexId v) const noexcept { return labels_[v]; }
  void set_label(VertexId v, Label l) noexcept { labels_[v] = l; }
  void swap_labels(VertexId a, VertexId b) noexcept { std::swap(labels_[a], labels_[b]); }

  std::span<const Label> labels() const noexcept { return labels_; }
  void set_labels(std::span<const Label> ls) {
    if (ls.size() != size()) throw Error(ErrorCode::SizeMismatch, "label count differs from vertex count");
    std::copy(ls.begin(), ls.end(), labels_.begin());
  }
  void fill_infinity() noexcept { std::fill(labels_.begin(), labels_.end(), Label::infinity()); }

  bool has_edge(VertexId u, VertexId v) const noexcept {
    if (u >= size() || v >= size()) return false;
    auto nx = next(u);
    return std::binary_search(nx.begin(), nx.end(), v);
  }

  /// All edges, ordered by (from, to).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < size(); ++u)
      for (VertexId v : next(u)) out.push_back({u, v});
    return out;
  }

 private:
  LabeledDag(std::size_t n, std::span<const Edge> edges) : labels_(n) {
    std::vector<std::size_t> in_deg(n, 0), out_deg(n, 0);
    for (const Edge& e : edges) {
      if (e.from >= n || e.to >= n)
        throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
      if (e.from == e.to)
        throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(e.from));
      ++out_deg[e.from];
      ++in_deg[e.to];
    }
    prev_off_.assign(n + 1, 0);
    next_off_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      prev_off_[v + 1] = prev_off_[v] + in_deg[v];
      next_off_[v + 1] = next_off_[v] + out_deg[v];
    }
    prev_ids_.resize(edges.size());
    next_ids_.resize(edges.size());
    std::vector<std::size_t> pfill(prev_off_.begin(), prev_off_.end() - 1);
    std::vector<std::size_t> nfill(next_off_.begin(), next_off_.end() - 1);
    for (const Edge& e : edges) {
      next_ids_[nfill[e.from]++] = e.to;
      prev_ids_[pfill[e.to]++] = e.from;
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto sort_range = [](std::vector<VertexId>& ids, std::size_t lo, std::size_t hi) {
        std::sort(ids.begin() + lo, ids.begin() + hi);
        if (std::adjacent_find(ids.begin() + lo, ids.begin() + hi) != ids.begin() + hi)
          throw Error(ErrorCode::InvalidArgument, "duplicate edge");
      };
      sort_range(next_ids_, next_off_[v], next_off_[v + 1]);
      sort_range(prev_ids_, prev_off_[v], prev_off_[v + 1]);
    }

    // Kahn's algorithm: every vertex must be dequeued, otherwise a cycle exists.
    std::vector<std::size_t> remaining(in_deg);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId v = 0; v < n; ++v)
      if (in_deg[v] == 0) queue.push_back(v);
    source_count_ = queue.size();
    source_ = queue.empty() ? 0 : queue.front();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : next(queue[head]))
        if (--remaining[w] == 0) queue.push_back(w);
    }
    if (queue.size() != n) throw Error(ErrorCode::CycleDetected, "edge set contains a directed cycle");
  }

  void check_reachable() const {
    std::vector<bool> seen(size(), false);
    std::vector<VertexId> stack{source_};
    seen[source_] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : next(u)) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count != size()) throw Error(ErrorCode::Unreachable, "vertex unreachable from source");
  }

  std::vector<Label> labels_;
  std::vector<std::size_t> prev_off_, next_off_;
  std::vector<VertexId> prev_ids_, next_ids_;
  VertexId source_ = 0;
  std::size_t source_count_ = 0;
};

/// True iff label(u) <= label(v). Throws NotAnEdge if (u, v) is not an edge.
inline bool is_good_edge(const LabeledDag& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v))
    throw Error(ErrorCode::NotAnEdge, "(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
  return g.label(u) <= g.label(v);
}

/// Full O(|E|) scan: every edge good. Works on LabeledDag and on the sift views.
template <class G>
bool is_ordered(const G& g) noexcept {
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v : g.next(u))
      if (g.label(v) < g.label(u)) return false;
  return true;
}

/// The label multiset, represented as a sorted vector.
inline std::vector<Label> labels_multiset(const LabeledDag& g) {
  std::vector<Label> out(g.labels().begin(), g.labels().end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace odag
