// odag: command-line front end for ordered-DAG sorting.
//
//   odag sort   --topology hypercube:2 --input numbers.txt
//   odag bench  --topology star,path,grid:2,hypercube --sizes 16,64 --pattern all
//   odag verify --seed 7
//   odag trace  --input data/example.dag --vertex 9 --new-label 3 --format dot
//
// Exit codes: 0 ok, 1 verify failure, 2 bad input or configuration,
// 3 size mismatch, 4 violated sift precondition.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "odag/analysis.hpp"
#include "odag/dag_io.hpp"
#include "odag/dag_sort.hpp"
#include "odag/reorder.hpp"
#include "odag/topologies.hpp"
#include "odag/trace_dot.hpp"
#include "odag/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSizeMismatch = 3;
constexpr int kExitPrecondition = 4;

struct RunConfig {
  std::string topology = "hypercube";
  std::string input = "-";
  std::string out;
  std::uint64_t seed = 1;
  std::string pattern = "all";
  std::string sizes = "16,64,256,1024";
  std::string format;
  std::size_t vertex = 0;
  std::string new_label;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw odag::Error(odag::ErrorCode::Parse, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Standard output unless --out names a file.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw odag::Error(odag::ErrorCode::Parse, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<std::int64_t> parse_numbers(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::int64_t> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty()) throw odag::Error(odag::ErrorCode::Parse, "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

int cmd_sort(const RunConfig& cfg) {
  std::vector<std::int64_t> a;
  std::optional<odag::Topology> fixed;
  try {
    a = parse_numbers(read_input(cfg.input));
    if (cfg.topology != "hypercube") fixed = odag::parse_topology(cfg.topology);
  } catch (const odag::Error& e) {
    std::cerr << "odag sort: " << e.what() << '\n';
    return kExitBadInput;
  }

  odag::SortReport r;
  try {
    r = fixed ? odag::dag_sort(*fixed, a) : odag::hypercube_sort(a);
  } catch (const odag::Error& e) {
    std::cerr << "odag sort: " << e.what() << '\n';
    return e.code() == odag::ErrorCode::SizeMismatch ? kExitSizeMismatch : kExitBadInput;
  }
  if (a.empty()) return 0;

  odag::DagStats st = odag::stats(odag::build(*r.topology));
  st.n = r.n_elements;
  const std::uint64_t bound = odag::general_bound(st);
  Output out(cfg.out);
  std::ostream& os = out.stream();
  for (std::size_t i = 0; i < r.output.size(); ++i) os << (i ? " " : "") << r.output[i];
  os << '\n';
  os << "n=" << r.n_elements << " topology=" << odag::to_string(*r.topology) << " insert_cmp=" << r.insert_comparisons
     << " remove_cmp=" << r.remove_comparisons << " total=" << r.total_comparisons << " bound=" << bound << '\n';
  return 0;
}

std::vector<std::int64_t> make_pattern(const std::string& pattern, std::size_t n, std::uint64_t seed) {
  std::vector<std::int64_t> a(n);
  if (pattern == "random") {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> value(-1'000'000, 1'000'000);
    for (auto& x : a) x = value(rng);
  } else if (pattern == "sorted") {
    for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::int64_t>(i);
  } else if (pattern == "reverse") {
    a = odag::worst_case_input(odag::Topology::path(std::max<std::size_t>(n, 1)), n);
  } else if (pattern == "equal") {
    std::fill(a.begin(), a.end(), 42);
  } else {
    throw odag::Error(odag::ErrorCode::Parse, "unknown pattern '" + pattern + "'");
  }
  return a;
}

// Topology family for a bench cell holding n elements. Hypercube rows use the
// smallest cube that fits; grid rows need n to be an exact K-th power.
odag::Topology family_topology(const std::string& family, std::size_t n) {
  if (family == "star") return odag::Topology::star(n);
  if (family == "path") return odag::Topology::path(n);
  if (family == "hypercube") return odag::Topology::hypercube(odag::hypercube_dimension_for(n));
  if (family.rfind("grid:", 0) == 0) {
    const auto parts = odag::parse_topology(family + ":1");
    const unsigned k = parts.dimensions;
    if (k == 0) throw odag::Error(odag::ErrorCode::InvalidArgument, "grid needs K >= 1");
    std::size_t s = 1;
    while (odag::vertex_count(odag::Topology::young_grid(k, s)) < n) ++s;
    if (odag::vertex_count(odag::Topology::young_grid(k, s)) != n)
      throw odag::Error(odag::ErrorCode::InvalidArgument,
                        "size " + std::to_string(n) + " is not a perfect power for " + family);
    return odag::Topology::young_grid(k, s);
  }
  throw odag::Error(odag::ErrorCode::Parse, "unknown topology family '" + family + "'");
}

int cmd_bench(const RunConfig& cfg) {
  struct Cell {
    odag::Topology topology;
    std::size_t n;
    std::string pattern;
  };
  std::vector<Cell> cells;
  try {
    std::vector<std::string> families = split_list(cfg.topology == "all" ? "star,path,grid:2,hypercube" : cfg.topology);
    std::vector<std::string> patterns = split_list(cfg.pattern == "all" ? "random,sorted,reverse,equal" : cfg.pattern);
    std::vector<std::size_t> sizes;
    for (const std::string& s : split_list(cfg.sizes)) {
      if (s.find_first_not_of("0123456789") != std::string::npos || std::stoull(s) == 0)
        throw odag::Error(odag::ErrorCode::Parse, "bad size '" + s + "'");
      sizes.push_back(std::stoull(s));
    }
    if (families.empty() || patterns.empty() || sizes.empty())
      throw odag::Error(odag::ErrorCode::InvalidArgument, "empty sweep");
    for (const std::string& f : families)
      for (std::size_t n : sizes)
        for (const std::string& p : patterns) {
          make_pattern(p, 0, 0);  // validates the name
          cells.push_back({family_topology(f, n), n, p});
        }
  } catch (const odag::Error& e) {
    std::cerr << "odag bench: " << e.what() << '\n';
    return kExitBadInput;
  }

  Output out(cfg.out);
  std::ostream& os = out.stream();
  os << "topology,n,pattern,seed,insert_cmp,remove_cmp,total_cmp,bound,worst_case_formula\n";
  for (const Cell& cell : cells) {
    const std::vector<std::int64_t> a = make_pattern(cell.pattern, cell.n, cfg.seed);
    const bool cube = cell.topology.kind == odag::TopologyKind::Hypercube;
    const odag::SortReport r = cube ? odag::hypercube_sort(a) : odag::dag_sort(cell.topology, a);
    odag::DagStats st = odag::stats(odag::build(cell.topology));
    st.n = cell.n;  // elements actually sorted; equals the vertex count except for padded hypercubes
    os << odag::to_string(cell.topology) << ',' << cell.n << ',' << cell.pattern << ',' << cfg.seed << ','
       << r.insert_comparisons << ',' << r.remove_comparisons << ',' << r.total_comparisons << ','
       << odag::general_bound(st) << ',';
    if (cube && odag::vertex_count(cell.topology) == cell.n)
      os << odag::hypercube_worst_case_closed(cell.topology.dimensions);
    os << '\n';
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  Output out(cfg.out);
  std::ostream& os = out.stream();
  bool all = true;
  for (const auto& r : odag::verify::run_all(cfg.seed)) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    all = all && r.passed;
  }
  return all ? 0 : kExitVerifyFailed;
}

int cmd_trace(const RunConfig& cfg) {
  std::optional<odag::LabeledDag> g;
  odag::Label fresh;
  try {
    odag::DagText text = odag::parse_dag_text(read_input(cfg.input));
    if (!text.labels) throw odag::Error(odag::ErrorCode::Parse, "trace fixture needs a labels: line");
    g = odag::to_dag(text, /*allow_multi_source=*/true);
    if (cfg.vertex >= g->size()) throw odag::Error(odag::ErrorCode::InvalidArgument, "vertex out of range");
    fresh = odag::parse_label(cfg.new_label);
    if (cfg.format != "dot" && cfg.format != "text")
      throw odag::Error(odag::ErrorCode::Parse, "trace format must be dot or text");
  } catch (const odag::Error& e) {
    std::cerr << "odag trace: " << e.what() << '\n';
    return kExitBadInput;
  }
  if (!odag::is_ordered(*g)) {
    std::cerr << "odag trace: input DAG is not ordered\n";
    return kExitPrecondition;
  }
  if (!(fresh < g->label(cfg.vertex))) {
    std::cerr << "odag trace: new label must be strictly below the current label " << g->label(cfg.vertex) << '\n';
    return kExitPrecondition;
  }

  const odag::LabeledDag before = *g;
  odag::ComparisonCounter counter;
  const odag::ExchangeTrace trace = odag::lower_label(*g, cfg.vertex, fresh, counter);

  Output out(cfg.out);
  std::ostream& os = out.stream();
  if (cfg.format == "text") {
    odag::write_trace_log(os, trace);
    return 0;
  }
  const auto snaps = odag::replay_sift(before, cfg.vertex, fresh, trace);
  for (std::size_t i = 0; i < snaps.size(); ++i) odag::write_dot(os, before, snaps[i], "step" + std::to_string(i));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered-DAG priority queues and sorting"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* sort = app.add_subcommand("sort", "Sort whitespace-separated integers");
  sort->add_option("--topology", cfg.topology, "hypercube (auto-sized), hypercube:K, star:N, path:N or grid:K:S");
  sort->add_option("--input", cfg.input, "input file, - for standard input");
  sort->add_option("--out", cfg.out, "output file");
  sort->add_option("--format", cfg.format, "text")->check(CLI::IsMember({"text"}));

  auto* bench = app.add_subcommand("bench", "Comparison-count sweep as CSV");
  bench->add_option("--topology", cfg.topology, "comma list of star, path, grid:K, hypercube, or all");
  bench->add_option("--sizes", cfg.sizes, "comma list of element counts");
  bench->add_option("--pattern", cfg.pattern, "comma list of random, sorted, reverse, equal, or all");
  bench->add_option("--seed", cfg.seed, "RNG seed for random inputs");
  bench->add_option("--out", cfg.out, "output file");
  bench->add_option("--format", cfg.format, "csv")->check(CLI::IsMember({"csv"}));

  auto* verify = app.add_subcommand("verify", "Run the invariant and bound self-checks");
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--out", cfg.out, "output file");

  auto* trace = app.add_subcommand("trace", "Trace one label-lowering sift");
  trace->add_option("--input", cfg.input, "DAG file with a labels: line")->required();
  trace->add_option("--vertex", cfg.vertex, "vertex whose label is lowered")->required();
  trace->add_option("--new-label", cfg.new_label, "new, strictly smaller label")->required();
  trace->add_option("--format", cfg.format, "dot (one digraph per iteration) or text (swap log)");
  trace->add_option("--out", cfg.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*sort) return cmd_sort(cfg);
    if (*bench) return cmd_bench(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*trace) {
      if (cfg.format.empty()) cfg.format = "dot";
      return cmd_trace(cfg);
    }
  } catch (const odag::Error& e) {
    std::cerr << "odag: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "odag: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
