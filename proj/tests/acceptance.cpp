// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "odag/analysis.hpp"
#include "odag/dag_sort.hpp"
#include "odag/fixtures.hpp"
#include "odag/invariants.hpp"
#include "odag/random_dag.hpp"
#include "odag/reorder.hpp"
#include "odag/topologies.hpp"
#include "odag/trace_dot.hpp"
#include "oracles.hpp"

using namespace odag;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<std::int64_t> pattern_input(int pattern, std::size_t n, std::mt19937_64& rng) {
  std::vector<std::int64_t> a(n);
  std::uniform_int_distribution<std::int64_t> value(-1'000'000, 1'000'000);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    switch (pattern) {
      case 0: a[i] = value(rng); break;
      case 1: a[i] = ii; break;
      case 2: a[i] = -ii; break;
      default: a[i] = 5; break;
    }
  }
  return a;
}

// 1. Worst case on the k-cube, three ways.
Outcome worst_case_exact() {
  Outcome o;
  for (unsigned k = 1; k <= 14; ++k) {
    std::vector<std::int64_t> a(std::size_t{1} << k);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<std::int64_t>(a.size() - i);
    const std::uint64_t run = hypercube_sort(a).insert_comparisons;
    const std::uint64_t closed = hypercube_worst_case_closed(k);
    const std::uint64_t sum = oracle::hypercube_worst_case_loops(k);
    if (run != closed || closed != sum) {
      o.ok = false;
      o.detail = "k=" + std::to_string(k) + " run=" + std::to_string(run) + " closed=" + std::to_string(closed) +
                 " sum=" + std::to_string(sum);
      return o;
    }
  }
  o.detail = "k=1..14, k=14 -> " + std::to_string(hypercube_worst_case_closed(14));
  return o;
}

// 2. Every sort stays within n L (D_in + D_out).
Outcome general_bound_sweep() {
  std::vector<Topology> tops;
  for (std::size_t n : {1, 2, 3, 5, 8, 16, 33, 64, 100, 257, 512, 1000, 2048, 4096}) {
    tops.push_back(Topology::star(n));
    tops.push_back(Topology::path(n));
  }
  for (unsigned k = 0; k <= 12; ++k) tops.push_back(Topology::hypercube(k));
  for (std::size_t s = 1; s <= 64; ++s) tops.push_back(Topology::young_grid(2, s));
  for (std::size_t s = 2; s <= 16; ++s) tops.push_back(Topology::young_grid(3, s));
  for (std::size_t s = 2; s <= 8; ++s) tops.push_back(Topology::young_grid(4, s));

  std::mt19937_64 rng(2024);
  std::uint64_t runs = 0, violations = 0;
  for (const Topology& t : tops) {
    const LabeledDag g = build(t);
    const std::uint64_t bound = general_bound(stats(g));
    for (int pattern = 0; pattern < 4; ++pattern) {
      const int repeats = pattern == 0 ? 6 : 1;
      for (int r = 0; r < repeats; ++r) {
        ++runs;
        if (dag_sort(t, pattern_input(pattern, g.size(), rng)).total_comparisons > bound) ++violations;
      }
    }
  }
  return {runs >= 1000 && violations == 0,
          std::to_string(runs) + " runs, " + std::to_string(violations) + " violations"};
}

// 3. Lowering 12 to 3 in the example DAG.
std::string example_trace_text(std::vector<Label>* final_labels) {
  LabeledDag g = fixtures::example_dag();
  const LabeledDag before = g;
  ComparisonCounter c;
  ExchangeTrace t = lower_label(g, 9, Label(3), c);
  std::ostringstream os;
  write_trace_log(os, t);
  for (const auto& snap : replay_sift(before, 9, Label(3), t)) write_dot(os, before, snap, "s");
  if (final_labels) final_labels->assign(g.labels().begin(), g.labels().end());
  return os.str();
}

Outcome golden_trace() {
  std::vector<Label> labels;
  const std::string first = example_trace_text(&labels);
  const std::string second = example_trace_text(nullptr);
  const std::string log =
      "swap 9 7 label=10\nswap 7 8 label=9\nswap 8 5 label=8\nswap 5 3 label=6\nswap 3 2 label=4\n";
  const std::vector<Label> want{1, 2, 3, 4, 6, 6, 8, 9, 8, 10, 14, 16};
  const bool log_ok = first.starts_with(log) && first.find("swap", log.size()) == std::string::npos;
  const bool ok = log_ok && labels == want && first == second;
  return {ok, std::string("5 exchanges 10,9,8,6,4") + (labels == want ? ", final labels match" : ", labels differ") +
                  (first == second ? ", byte-stable" : ", unstable")};
}

// 4. Sorting against std::sort on every topology family.
Outcome sorting_oracle() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(0, 1024);
  std::uint64_t arrays = 0, mismatches = 0;
  for (int i = 0; i < 10'000; ++i) {
    std::size_t n = size(rng);
    std::uniform_int_distribution<std::int64_t> value(-static_cast<std::int64_t>(n / 4), static_cast<std::int64_t>(n / 4));
    SortReport r;
    std::vector<std::int64_t> a;
    const int family = i % 4;
    auto fill = [&](std::size_t m) {
      a.resize(m);
      for (auto& x : a) x = value(rng);
    };
    if (family == 0 || n == 0) {
      fill(n);
      r = hypercube_sort(a);
    } else if (family == 1) {
      fill(n);
      r = dag_sort(Topology::star(n), a);
    } else if (family == 2) {
      fill(n);
      r = dag_sort(Topology::path(n), a);
    } else {
      // Largest k-dimensional grid of side s with s^k <= n.
      const unsigned k = 1 + static_cast<unsigned>(i / 4 % 3);
      std::size_t s = static_cast<std::size_t>(std::pow(static_cast<double>(n), 1.0 / k));
      while (vertex_count(Topology::young_grid(k, s + 1)) <= n) ++s;
      while (s > 1 && vertex_count(Topology::young_grid(k, s)) > n) --s;
      const Topology t = Topology::young_grid(k, s);
      fill(vertex_count(t));
      r = dag_sort(t, a);
    }
    std::vector<std::int64_t> expected = a;
    std::sort(expected.begin(), expected.end());
    ++arrays;
    if (r.output != expected) ++mismatches;
  }
  return {mismatches == 0, std::to_string(arrays) + " arrays, " + std::to_string(mismatches) + " mismatches"};
}

// 5. After each sift: ordered, one replacement in the multiset, at most L
// steps; loop invariant checked at every iteration.
Outcome sift_properties() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> size(1, 64);
  std::uniform_real_distribution<double> density(0.0, 0.3);
  std::uniform_int_distribution<std::int64_t> delta(1, 30);
  std::bernoulli_distribution lower(0.5);
  std::uint64_t ops = 0, failures = 0, iterations = 0, invariant_failures = 0;
  while (ops < 10'000) {
    LabeledDag g = random_single_source_dag(size(rng), density(rng), rng);
    assign_random_ordered_labels(g, rng);
    const std::size_t L = stats(g).longest_path;
    std::uniform_int_distribution<VertexId> pick(0, g.size() - 1);
    for (int i = 0; i < 50; ++i, ++ops) {
      const VertexId v = pick(rng);
      std::vector<Label> expected(g.labels().begin(), g.labels().end());
      const Label old = g.label(v);
      const bool is_lower = lower(rng);
      const Label fresh(is_lower ? old.value() - delta(rng) : old.value() + delta(rng));
      LoopInvariantChecker inv{is_lower};
      ComparisonCounter c;
      ExchangeTrace t = is_lower ? lower_label(g, v, fresh, c, inv) : raise_label(g, v, fresh, c, inv);
      expected[v] = fresh;
      std::sort(expected.begin(), expected.end());
      std::vector<Label> now(g.labels().begin(), g.labels().end());
      std::sort(now.begin(), now.end());
      if (!is_ordered(g) || now != expected || t.steps.size() > L) ++failures;
      iterations += inv.iterations;
      invariant_failures += inv.part1_failures + inv.part2_failures;
    }
  }
  return {failures == 0 && invariant_failures == 0 && iterations >= 1000,
          std::to_string(ops) + " ops, " + std::to_string(failures) + " failures, " + std::to_string(iterations) +
              " invariant iterations, " + std::to_string(invariant_failures) + " invariant failures"};
}

// 6. Direct raise vs lowering on the reversed view.
Outcome raise_equivalence() {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> size(1, 64);
  std::uniform_real_distribution<double> density(0.0, 0.4);
  std::uniform_int_distribution<std::int64_t> delta(1, 40);
  std::uint64_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    LabeledDag a = random_single_source_dag(size(rng), density(rng), rng);
    assign_random_ordered_labels(a, rng);
    LabeledDag b = a;
    const VertexId v = std::uniform_int_distribution<VertexId>(0, a.size() - 1)(rng);
    const Label fresh = i % 10 == 0 ? Label::infinity() : Label(a.label(v).value() + delta(rng));
    ComparisonCounter c;
    raise_label(a, v, fresh, c);
    raise_label_via_reversal(b, v, fresh);
    if (!std::ranges::equal(a.labels(), b.labels())) ++mismatches;
  }
  return {mismatches == 0, "1000 instances, " + std::to_string(mismatches) + " mismatches"};
}

// 7. (1/n) log2(n!) <= L (D_in + D_out).
Outcome corollary() {
  std::uint64_t checks = 0, failures = 0;
  double tightest = 1e300;
  auto check = [&](const LabeledDag& g) {
    const CorollaryCheck c = corollary_holds(stats(g));
    ++checks;
    if (!c.ok) ++failures;
    tightest = std::min(tightest, c.rhs - c.lhs);
  };
  for (std::size_t n = 2; n <= 4096; n = n < 64 ? n + 1 : n * 2) {
    check(build(Topology::star(n)));
    check(build(Topology::path(n)));
  }
  check(build(Topology::star(4096)));
  for (unsigned k = 1; k <= 12; ++k) check(build(Topology::hypercube(k)));
  for (std::size_t s = 2; s <= 64; ++s) check(build(Topology::young_grid(2, s)));
  for (std::size_t s = 2; s <= 16; ++s) check(build(Topology::young_grid(3, s)));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(2, 256);
  std::uniform_real_distribution<double> density(0.0, 0.2);
  for (int i = 0; i < 1000; ++i) check(random_single_source_dag(size(rng), density(rng), rng));
  char buf[64];
  std::snprintf(buf, sizeof buf, ", min slack %.3f", tightest);
  return {failures == 0, std::to_string(checks) + " instances, " + std::to_string(failures) + " failures" + buf};
}

// 8. Hypercube degrees, distances and layer sizes.
Outcome hypercube_structure() {
  std::uint64_t failures = 0;
  for (unsigned k = 0; k <= 12; ++k) {
    const LabeledDag g = build(Topology::hypercube(k));
    // Shortest (BFS) and longest (DP in index order, which is topological
    // because every edge adds a bit) distances; equal means all paths agree.
    std::vector<std::size_t> shortest(g.size(), SIZE_MAX), longest(g.size(), 0);
    std::queue<VertexId> q;
    shortest[0] = 0;
    q.push(0);
    while (!q.empty()) {
      const VertexId u = q.front();
      q.pop();
      for (VertexId w : g.next(u))
        if (shortest[w] == SIZE_MAX) {
          shortest[w] = shortest[u] + 1;
          q.push(w);
        }
    }
    for (VertexId u = 0; u < g.size(); ++u)
      for (VertexId w : g.next(u)) longest[w] = std::max(longest[w], longest[u] + 1);

    std::vector<std::uint64_t> layer(k + 1, 0);
    for (VertexId v = 0; v < g.size(); ++v) {
      const unsigned m = static_cast<unsigned>(std::popcount(v));
      ++layer[m];
      if (g.prev(v).size() != m || g.next(v).size() != k - m) ++failures;
      if (shortest[v] != m || longest[v] != m) ++failures;
    }
    std::uint64_t binom = 1;
    for (unsigned m = 0; m <= k; ++m) {
      if (layer[m] != binom) ++failures;
      binom = binom * (k - m) / (m + 1);
    }
  }
  return {failures == 0, "k=0..12, " + std::to_string(failures) + " failures"};
}

// 9. Slope of log(total) against log(n log2^2 n) for random input.
Outcome asymptotic_slope() {
  std::mt19937_64 rng(9);
  std::vector<double> xs, ys;
  for (unsigned k = 6; k <= 14; ++k) {
    const std::size_t n = std::size_t{1} << k;
    double total = 0;
    const int runs = 3;
    for (int r = 0; r < runs; ++r) total += static_cast<double>(hypercube_sort(pattern_input(0, n, rng)).total_comparisons);
    const double lg = std::log2(static_cast<double>(n));
    xs.push_back(std::log(static_cast<double>(n) * lg * lg));
    ys.push_back(std::log(total / runs));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  char buf[64];
  std::snprintf(buf, sizeof buf, "slope %.4f over k=6..14", slope);
  return {slope >= 0.9 && slope <= 1.1, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 hypercube worst case exact", worst_case_exact},
      {"2 general comparison bound", general_bound_sweep},
      {"3 golden exchange trace", golden_trace},
      {"4 sorting oracle", sorting_oracle},
      {"5 sift properties and loop invariant", sift_properties},
      {"6 raise via reversal equivalence", raise_equivalence},
      {"7 log-factorial corollary", corollary},
      {"8 hypercube structure", hypercube_structure},
      {"9 asymptotic slope", asymptotic_slope},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%s; %.2fs)\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
