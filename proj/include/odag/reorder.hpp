#pragma once

// Sift procedures that restore the ordered property after one label changes.
//
// lower_label moves a decreased label toward the source by exchanging it
// with its largest violating previous neighbour. raise_label is the mirror
// image: it moves an increased label toward the sinks by exchanging it with
// the smallest violating next neighbour. raise_label_via_reversal reaches the
// same result by running lower_label on the edge-reversed, order-reversed DAG.
//
// Cost model: a selector scanning m >= 1 neighbours performs exactly m label
// comparisons (m - 1 to find the extreme neighbour, one violation test), and
// none when the neighbour list is empty.
//
// Define ODAG_CHECK_ORDERED to verify the ordered precondition on every call
// (O(|E|)). ODAG_INVERT_TIE_BREAK flips the tie rule to highest VertexId; it
// exists only to build a fault-injected binary for test-sensitivity checks.

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "odag/error.hpp"
#include "odag/label.hpp"
#include "odag/labeled_dag.hpp"

namespace odag {

/// Number of label-vs-label comparisons performed.
class ComparisonCounter {
 public:
  std::uint64_t count() const noexcept { return count_; }
  void add(std::uint64_t n) noexcept { count_ += n; }
  void reset() noexcept { count_ = 0; }

 private:
  std::uint64_t count_ = 0;
};

/// Anything the sift procedures can operate on.
template <class G>
concept SiftGraph = requires(G& g, const G& cg, VertexId v, typename G::label_type l) {
  { cg.size() } -> std::convertible_to<std::size_t>;
  { cg.prev(v) } -> std::convertible_to<std::span<const VertexId>>;
  { cg.next(v) } -> std::convertible_to<std::span<const VertexId>>;
  { cg.label(v) } -> std::convertible_to<typename G::label_type>;
  g.set_label(v, l);
  g.swap_labels(v, v);
};

/// Edge-reversed, label-negated view of a LabeledDag.
///
/// Nothing is materialized: prev/next are swapped and labels are read and
/// written through NegatedLabel.
class ReversedView {
 public:
  using label_type = NegatedLabel;

  explicit ReversedView(LabeledDag& g) noexcept : g_(&g) {}

  std::size_t size() const noexcept { return g_->size(); }
  std::span<const VertexId> prev(VertexId v) const noexcept { return g_->next(v); }
  std::span<const VertexId> next(VertexId v) const noexcept { return g_->prev(v); }
  NegatedLabel label(VertexId v) const noexcept { return negate(g_->label(v)); }
  void set_label(VertexId v, NegatedLabel l) noexcept { g_->set_label(v, negate(l)); }
  void swap_labels(VertexId a, VertexId b) noexcept { g_->swap_labels(a, b); }

 private:
  LabeledDag* g_;
};

struct ExchangeStep {
  VertexId from;  // vertex holding the sifted label before the exchange
  VertexId to;    // violating neighbour it was exchanged with
  Label moved;    // label that moved from `to` into `from`

  friend bool operator==(const ExchangeStep&, const ExchangeStep&) = default;
};

struct ExchangeTrace {
  std::vector<ExchangeStep> steps;
  VertexId terminal = 0;

  friend bool operator==(const ExchangeTrace&, const ExchangeTrace&) = default;
};

/// One line per step: "swap u v label=x".
inline void write_trace_log(std::ostream& os, const ExchangeTrace& trace) {
  for (const ExchangeStep& s : trace.steps) os << "swap " << s.from << ' ' << s.to << " label=" << s.moved << '\n';
}

/// Sift observers are called with (graph, current) after the label is first
/// set and after every exchange.
struct NoSiftObserver {
  template <class G>
  constexpr void operator()(const G&, VertexId) const noexcept {}
};

namespace detail {

inline Label as_label(Label l) noexcept { return l; }
inline Label as_label(NegatedLabel l) noexcept { return l.inner; }

// Whether candidate should replace best in an argmax (sign = +1) or argmin
// (sign = -1) scan over ascending VertexIds.
template <class L>
bool replaces(const L& candidate, const L& best, int sign) noexcept {
#ifdef ODAG_INVERT_TIE_BREAK
  return sign > 0 ? candidate >= best : candidate <= best;
#else
  return sign > 0 ? candidate > best : candidate < best;
#endif
}

template <SiftGraph G>
void check_ordered_precondition([[maybe_unused]] const G& g) {
#ifdef ODAG_CHECK_ORDERED
  if (!is_ordered(g)) throw Error(ErrorCode::NotOrdered, "sift precondition: DAG is not ordered");
#endif
}

}  // namespace detail

/// Previous neighbour of v with the largest label, if that label exceeds
/// label(v). Ties go to the smallest VertexId.
template <SiftGraph G>
std::optional<VertexId> get_largest_violating(const G& g, VertexId v, ComparisonCounter& c) {
  auto ps = g.prev(v);
  if (ps.empty()) return std::nullopt;
  VertexId best = ps[0];
  for (std::size_t i = 1; i < ps.size(); ++i)
    if (detail::replaces(g.label(ps[i]), g.label(best), +1)) best = ps[i];
  c.add(ps.size());
  if (g.label(v) < g.label(best)) return best;
  return std::nullopt;
}

/// Next neighbour of v with the smallest label, if that label is below
/// label(v). Ties go to the smallest VertexId.
template <SiftGraph G>
std::optional<VertexId> get_smallest_violating_next(const G& g, VertexId v, ComparisonCounter& c) {
  auto ns = g.next(v);
  if (ns.empty()) return std::nullopt;
  VertexId best = ns[0];
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (detail::replaces(g.label(ns[i]), g.label(best), -1)) best = ns[i];
  c.add(ns.size());
  if (g.label(best) < g.label(v)) return best;
  return std::nullopt;
}

/// Replaces label(v) with a strictly smaller new_label and sifts it toward
/// the source until the DAG is ordered again.
template <SiftGraph G, class Observer = NoSiftObserver>
ExchangeTrace lower_label(G& g, VertexId v, typename G::label_type new_label, ComparisonCounter& c,
                          Observer&& observe = {}) {
  if (v >= g.size()) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  if (!(new_label < g.label(v))) throw Error(ErrorCode::NotLowering, "new label must be strictly smaller");
  detail::check_ordered_precondition(g);

  ExchangeTrace trace;
  g.set_label(v, new_label);
  VertexId current = v;
  observe(std::as_const(g), current);
  while (auto violating = get_largest_violating(g, current, c)) {
    trace.steps.push_back({current, *violating, detail::as_label(g.label(*violating))});
    g.swap_labels(current, *violating);
    current = *violating;
    observe(std::as_const(g), current);
  }
  trace.terminal = current;
  return trace;
}

/// Replaces label(v) with a strictly larger new_label and sifts it toward
/// the sinks. Direct symmetric form of lower_label.
template <SiftGraph G, class Observer = NoSiftObserver>
ExchangeTrace raise_label(G& g, VertexId v, typename G::label_type new_label, ComparisonCounter& c,
                          Observer&& observe = {}) {
  if (v >= g.size()) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  if (!(g.label(v) < new_label)) throw Error(ErrorCode::NotRaising, "new label must be strictly larger");
  detail::check_ordered_precondition(g);

  ExchangeTrace trace;
  g.set_label(v, new_label);
  VertexId current = v;
  observe(std::as_const(g), current);
  while (auto violating = get_smallest_violating_next(g, current, c)) {
    trace.steps.push_back({current, *violating, detail::as_label(g.label(*violating))});
    g.swap_labels(current, *violating);
    current = *violating;
    observe(std::as_const(g), current);
  }
  trace.terminal = current;
  return trace;
}

/// raise_label computed as: negate all labels, reverse all edges, lower the
/// label to -new_label, then undo both transformations. The transformations
/// are logical (ReversedView), so the DAG is never copied.
inline ExchangeTrace raise_label_via_reversal(LabeledDag& g, VertexId v, Label new_label, ComparisonCounter& c) {
  if (v >= g.size()) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  if (!(g.label(v) < new_label)) throw Error(ErrorCode::NotRaising, "new label must be strictly larger");
  ReversedView reversed(g);
  return lower_label(reversed, v, negate(new_label), c);
}

inline ExchangeTrace raise_label_via_reversal(LabeledDag& g, VertexId v, Label new_label) {
  ComparisonCounter scratch;
  return raise_label_via_reversal(g, v, new_label, scratch);
}

}  // namespace odag
