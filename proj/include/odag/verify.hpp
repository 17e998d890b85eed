#pragma once

// Self-check suites run by `odag verify`. Each suite is randomized from a
// seed and reports PASS/FAIL with a short detail string.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "odag/analysis.hpp"
#include "odag/dag_sort.hpp"
#include "odag/fixtures.hpp"
#include "odag/invariants.hpp"
#include "odag/labeled_dag.hpp"
#include "odag/random_dag.hpp"
#include "odag/reorder.hpp"
#include "odag/topologies.hpp"

namespace odag::verify {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline SuiteResult result(std::string name, std::uint64_t failures, std::uint64_t checks) {
  return {std::move(name), failures == 0,
          std::to_string(checks - failures) + "/" + std::to_string(checks) + " checks"};
}

// Random lower/raise operations on random ordered DAGs; calls `check` after
// each sift with (dag, labels before, vertex, old label, new label, trace, checker).
template <class Check>
void random_sifts(std::uint64_t seed, std::size_t dags, std::size_t ops_per_dag, Check&& check) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 48);
  std::uniform_real_distribution<double> density(0.0, 0.3);
  for (std::size_t d = 0; d < dags; ++d) {
    LabeledDag g = random_single_source_dag(size(rng), density(rng), rng);
    assign_random_ordered_labels(g, rng);
    std::uniform_int_distribution<VertexId> pick(0, g.size() - 1);
    std::uniform_int_distribution<std::int64_t> delta(1, 30);
    std::bernoulli_distribution lower(0.5);
    for (std::size_t i = 0; i < ops_per_dag; ++i) {
      const VertexId v = pick(rng);
      const std::vector<Label> before(g.labels().begin(), g.labels().end());
      const Label old = g.label(v);
      const bool is_lower = lower(rng);
      const Label fresh = is_lower ? Label(old.value() - delta(rng)) : Label(old.value() + delta(rng));
      LoopInvariantChecker inv{is_lower};
      ComparisonCounter c;
      ExchangeTrace t = is_lower ? lower_label(g, v, fresh, c, inv) : raise_label(g, v, fresh, c, inv);
      check(g, before, v, old, fresh, t, inv);
    }
  }
}

}  // namespace detail

inline SuiteResult ordered_after_sift(std::uint64_t seed) {
  std::uint64_t checks = 0, failures = 0;
  detail::random_sifts(seed, 100, 50, [&](const LabeledDag& g, auto&&...) {
    ++checks;
    if (!is_ordered(g)) ++failures;
  });
  return detail::result("ordered-after-sift", failures, checks);
}

inline SuiteResult multiset_conservation(std::uint64_t seed) {
  std::uint64_t checks = 0, failures = 0;
  detail::random_sifts(seed + 1, 100, 50,
                       [&](const LabeledDag& g, const std::vector<Label>& before, VertexId, Label old, Label fresh,
                           const ExchangeTrace&, const LoopInvariantChecker&) {
                         ++checks;
                         std::vector<Label> expected = before;
                         *std::find(expected.begin(), expected.end(), old) = fresh;
                         std::sort(expected.begin(), expected.end());
                         if (labels_multiset(g) != expected) ++failures;
                       });
  return detail::result("multiset-conservation", failures, checks);
}

inline SuiteResult loop_invariant(std::uint64_t seed) {
  std::uint64_t checks = 0, failures = 0;
  detail::random_sifts(seed + 2, 100, 50,
                       [&](const LabeledDag&, const std::vector<Label>&, VertexId, Label, Label,
                           const ExchangeTrace&, const LoopInvariantChecker& inv) {
                         checks += inv.iterations;
                         failures += inv.part1_failures + inv.part2_failures;
                       });
  return detail::result("loop-invariant", failures, checks);
}

inline SuiteResult raise_equivalence(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 3);
  std::uniform_int_distribution<std::size_t> size(1, 64);
  std::uniform_real_distribution<double> density(0.0, 0.3);
  std::uniform_int_distribution<std::int64_t> delta(1, 40);
  std::uint64_t checks = 0, failures = 0;
  for (int i = 0; i < 1000; ++i) {
    LabeledDag a = random_single_source_dag(size(rng), density(rng), rng);
    assign_random_ordered_labels(a, rng);
    LabeledDag b = a;
    const VertexId v = std::uniform_int_distribution<VertexId>(0, a.size() - 1)(rng);
    const Label fresh = Label(a.label(v).value() + delta(rng));
    ComparisonCounter c;
    raise_label(a, v, fresh, c);
    raise_label_via_reversal(b, v, fresh);
    ++checks;
    if (!std::ranges::equal(a.labels(), b.labels())) ++failures;
  }
  return detail::result("raise-equivalence", failures, checks);
}

inline SuiteResult corollary(std::uint64_t seed) {
  std::uint64_t checks = 0, failures = 0;
  auto check = [&](const LabeledDag& g) {
    ++checks;
    if (!corollary_holds(stats(g)).ok) ++failures;
  };
  for (std::size_t n : {2, 3, 16, 100, 1024, 4096}) {
    check(build(Topology::star(n)));
    check(build(Topology::path(n)));
  }
  for (unsigned k = 1; k <= 12; ++k) check(build(Topology::hypercube(k)));
  for (unsigned k = 1; k <= 4; ++k)
    for (std::size_t s : {2, 3, 5})
      check(build(Topology::young_grid(k, s)));
  std::mt19937_64 rng(seed + 4);
  std::uniform_int_distribution<std::size_t> size(2, 256);
  std::uniform_real_distribution<double> density(0.0, 0.2);
  for (int i = 0; i < 1000; ++i) check(random_single_source_dag(size(rng), density(rng), rng));
  return detail::result("corollary", failures, checks);
}

inline SuiteResult sorting_oracle(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 5);
  std::uniform_int_distribution<std::size_t> size(0, 300);
  std::uniform_int_distribution<std::int64_t> value(-50, 50);
  std::uint64_t checks = 0, failures = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<std::int64_t> a(size(rng));
    for (auto& x : a) x = value(rng);
    std::vector<std::int64_t> expected = a;
    std::sort(expected.begin(), expected.end());
    ++checks;
    if (hypercube_sort(a).output != expected) ++failures;
    if (!a.empty()) {
      checks += 2;
      if (dag_sort(Topology::star(a.size()), a).output != expected) ++failures;
      if (dag_sort(Topology::path(a.size()), a).output != expected) ++failures;
    }
  }
  return detail::result("sorting-oracle", failures, checks);
}

inline SuiteResult hypercube_worst_case() {
  std::uint64_t checks = 0, failures = 0;
  for (unsigned k = 1; k <= 12; ++k) {
    const Topology t = Topology::hypercube(k);
    const SortReport r = hypercube_sort(worst_case_input(t, std::size_t{1} << k));
    ++checks;
    if (r.insert_comparisons != hypercube_worst_case_closed(k) ||
        r.insert_comparisons != hypercube_worst_case_sum(k))
      ++failures;
  }
  return detail::result("hypercube-worst-case", failures, checks);
}

inline SuiteResult general_bound_sweep(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 6);
  std::uniform_int_distribution<std::int64_t> value(-1000, 1000);
  std::uint64_t checks = 0, failures = 0;
  std::vector<Topology> tops;
  for (std::size_t n : {1, 2, 7, 64, 200}) {
    tops.push_back(Topology::star(n));
    tops.push_back(Topology::path(n));
  }
  for (unsigned k = 0; k <= 8; ++k) tops.push_back(Topology::hypercube(k));
  for (unsigned k = 1; k <= 3; ++k) tops.push_back(Topology::young_grid(k, 4));
  for (const Topology& t : tops) {
    const std::size_t n = vertex_count(t);
    const std::uint64_t bound = general_bound(stats(build(t)));
    for (int pattern = 0; pattern < 4; ++pattern) {
      std::vector<std::int64_t> a(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<std::int64_t>(i);
        a[i] = pattern == 0 ? value(rng) : pattern == 1 ? ii : pattern == 2 ? -ii : 7;
      }
      ++checks;
      if (dag_sort(t, a).total_comparisons > bound) ++failures;
    }
  }
  return detail::result("general-bound", failures, checks);
}

/// Lowering the example DAG's 12 to 3 must reproduce the known exchange
/// sequence and final labeling, identically on repeated runs.
inline SuiteResult determinism_golden() {
  std::uint64_t checks = 0, failures = 0;
  const ExchangeTrace expected = fixtures::example_lowering_trace();
  for (int run = 0; run < 2; ++run) {
    LabeledDag g = fixtures::example_dag();
    ComparisonCounter c;
    ExchangeTrace t = lower_label(g, fixtures::kLoweredVertex, Label(fixtures::kLoweredTo), c);
    checks += 2;
    if (t != expected) ++failures;
    std::vector<Label> want(fixtures::kLoweredLabels.begin(), fixtures::kLoweredLabels.end());
    if (!std::ranges::equal(g.labels(), want)) ++failures;
  }
  return detail::result("determinism-golden", failures, checks);
}

inline std::vector<SuiteResult> run_all(std::uint64_t seed) {
  return {ordered_after_sift(seed), multiset_conservation(seed), loop_invariant(seed), raise_equivalence(seed),
          corollary(seed),          sorting_oracle(seed),        hypercube_worst_case(), general_bound_sweep(seed),
          determinism_golden()};
}

}  // namespace odag::verify
