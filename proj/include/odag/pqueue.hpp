#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "odag/error.hpp"
#include "odag/label.hpp"
#include "odag/labeled_dag.hpp"
#include "odag/reorder.hpp"
#include "odag/topologies.hpp"

namespace odag {

/// Priority queue over any single-source DAG.
///
/// Every vertex starts at infinity. insert() lowers the next infinite vertex
/// of the insertion order, remove_min() raises the source back to infinity,
/// and lower_label_at()/raise_label_at() change one key in place. The DAG is
/// ordered at every public boundary, so the source always holds the minimum.
///
/// Vertex ids returned by insert() and get_min() are positions, not stable
/// element handles: later sifts may move a different label into the vertex.
class OrderedDagQueue {
 public:
  explicit OrderedDagQueue(LabeledDag g) : OrderedDagQueue(std::move(g), std::nullopt) {}

  /// Uses `order` as the insertion cursor. It must enumerate every vertex
  /// once, source first.
  OrderedDagQueue(LabeledDag g, VertexOrder order) : OrderedDagQueue(std::move(g), std::optional(std::move(order))) {}

  std::size_t capacity() const noexcept { return dag_.size(); }
  std::size_t size() const noexcept { return occupied_; }
  bool empty() const noexcept { return occupied_ == 0; }
  bool full() const noexcept { return occupied_ == dag_.size(); }

  const LabeledDag& dag() const noexcept { return dag_; }
  ComparisonCounter& counter() noexcept { return counter_; }
  const ComparisonCounter& counter() const noexcept { return counter_; }

  /// Position of v in the insertion order.
  std::size_t order_position(VertexId v) const noexcept { return position_[v]; }
  /// Vertices still labeled infinity.
  std::size_t infinity_slots() const noexcept { return infinity_positions_.size(); }

  /// Inserts a finite label; returns the vertex where it came to rest.
  VertexId insert(Label l) {
    if (!l.is_finite()) throw Error(ErrorCode::NonFiniteLabel, "cannot insert infinity");
    if (full()) throw Error(ErrorCode::Full, "queue is full");
    VertexId target;
    if (pure_insert_) {
      target = cursor_->next();
    } else {
      target = order_[*infinity_positions_.begin()];
    }
    auto trace = lower_label(dag_, target, l, counter_);
    ++occupied_;
    refresh(target);
    for (const ExchangeStep& s : trace.steps) refresh(s.to);
    return trace.terminal;
  }

  std::pair<VertexId, Label> get_min() const {
    if (empty()) throw Error(ErrorCode::Empty, "queue is empty");
    return {dag_.source(), dag_.label(dag_.source())};
  }

  Label remove_min() {
    if (empty()) throw Error(ErrorCode::Empty, "queue is empty");
    const VertexId s = dag_.source();
    const Label old = dag_.label(s);
    auto trace = raise_label(dag_, s, Label::infinity(), counter_);
    --occupied_;
    pure_insert_ = false;
    refresh(s);
    for (const ExchangeStep& s2 : trace.steps) refresh(s2.to);
    return old;
  }

  /// Decreases label(v). Lowering an infinite vertex stores a new element there.
  void lower_label_at(VertexId v, Label new_label) {
    check_vertex(v);
    if (!new_label.is_finite()) throw Error(ErrorCode::NonFiniteLabel, "lowered label must be finite");
    const bool was_infinite = dag_.label(v).is_infinite();
    auto trace = lower_label(dag_, v, new_label, counter_);
    if (was_infinite) {
      ++occupied_;
      pure_insert_ = false;
    }
    refresh(v);
    for (const ExchangeStep& s : trace.steps) refresh(s.to);
  }

  /// Increases label(v) to a finite value. Raising to infinity is remove_min's job.
  void raise_label_at(VertexId v, Label new_label) {
    check_vertex(v);
    if (new_label.is_infinite() && dag_.label(v).is_finite())
      throw Error(ErrorCode::RaiseToInfinityForbidden, "use remove_min to delete an element");
    auto trace = raise_label(dag_, v, new_label, counter_);
    refresh(v);
    for (const ExchangeStep& s : trace.steps) refresh(s.to);
  }

 private:
  OrderedDagQueue(LabeledDag g, std::optional<VertexOrder> order) : dag_(std::move(g)) {
    if (!dag_.single_source()) throw Error(ErrorCode::MultipleSources, "queue needs a single-source DAG");
    for (const Label& l : dag_.labels())
      if (l.is_finite()) throw Error(ErrorCode::NotAllInfinity, "queue must start with every label infinite");
    cursor_ = order ? std::move(*order) : VertexOrder::bfs(dag_);
    if (cursor_->size() != dag_.size() || cursor_->yielded() != 0)
      throw Error(ErrorCode::InvalidArgument, "insertion order does not match the DAG");

    // Materialize positions from a copy so the live cursor stays untouched.
    VertexOrder scan = *cursor_;
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    position_.assign(dag_.size(), unset);
    order_.reserve(dag_.size());
    while (!scan.exhausted()) {
      VertexId v = scan.next();
      if (v >= dag_.size() || position_[v] != unset)
        throw Error(ErrorCode::InvalidArgument, "insertion order is not a permutation of the vertices");
      position_[v] = order_.size();
      order_.push_back(v);
    }
    if (!order_.empty() && order_.front() != dag_.source())
      throw Error(ErrorCode::InvalidArgument, "insertion order must start at the source");
    for (std::size_t p = 0; p < order_.size(); ++p) infinity_positions_.insert(infinity_positions_.end(), p);
    infinite_.assign(dag_.size(), 1);
  }

  void check_vertex(VertexId v) const {
    if (v >= dag_.size()) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  }

  void refresh(VertexId v) {
    const bool inf = dag_.label(v).is_infinite();
    if (inf == static_cast<bool>(infinite_[v])) return;
    infinite_[v] = inf;
    if (inf)
      infinity_positions_.insert(position_[v]);
    else
      infinity_positions_.erase(position_[v]);
  }

  LabeledDag dag_;
  std::optional<VertexOrder> cursor_;
  std::vector<VertexId> order_;
  std::vector<std::size_t> position_;
  std::set<std::size_t> infinity_positions_;
  std::vector<char> infinite_;  // mirrors membership in infinity_positions_, by vertex
  std::size_t occupied_ = 0;
  bool pure_insert_ = true;  // no removals yet: the cursor is the insertion target
  ComparisonCounter counter_;
};

}  // namespace odag
