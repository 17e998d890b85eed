#pragma once

// Plain-text DAG format:
//
//   n m
//   u v        (m lines, edge u -> v)
//   labels: l_0 ... l_{n-1}     (optional; "inf" for infinity)
//
// Tokens are whitespace separated.

#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "odag/error.hpp"
#include "odag/labeled_dag.hpp"

namespace odag {

struct DagText {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::optional<std::vector<Label>> labels;
};

inline Label parse_label(const std::string& tok) {
  if (tok == "inf" || tok == "+inf") return Label::infinity();
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad label '" + tok + "'");
  }
  if (used != tok.size()) throw Error(ErrorCode::Parse, "bad label '" + tok + "'");
  return Label(static_cast<std::int64_t>(v));
}

inline DagText parse_dag_text(std::istream& in) {
  DagText out;
  std::size_t m = 0;
  if (!(in >> out.n >> m)) throw Error(ErrorCode::Parse, "expected header 'n m'");
  out.edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Edge e{};
    if (!(in >> e.from >> e.to)) throw Error(ErrorCode::Parse, "expected edge line " + std::to_string(i + 1));
    out.edges.push_back(e);
  }
  std::string tok;
  if (!(in >> tok)) return out;
  if (tok != "labels:") throw Error(ErrorCode::Parse, "unexpected token '" + tok + "'");
  std::vector<Label> labels;
  labels.reserve(out.n);
  while (in >> tok) labels.push_back(parse_label(tok));
  if (labels.size() != out.n)
    throw Error(ErrorCode::Parse, "expected " + std::to_string(out.n) + " labels, got " + std::to_string(labels.size()));
  out.labels = std::move(labels);
  return out;
}

inline DagText parse_dag_text(const std::string& text) {
  std::istringstream in(text);
  return parse_dag_text(in);
}

/// Builds the DAG described by `text`. With `allow_multi_source` the
/// single-source requirement is skipped (used for trace fixtures).
inline LabeledDag to_dag(const DagText& text, bool allow_multi_source = false) {
  LabeledDag g = allow_multi_source ? LabeledDag::from_edges_multi_source_unchecked(text.n, text.edges)
                                    : LabeledDag::from_edges(text.n, text.edges);
  if (text.labels) g.set_labels(*text.labels);
  return g;
}

inline void write_dag_text(std::ostream& os, const LabeledDag& g, bool with_labels = true) {
  os << g.size() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.from << ' ' << e.to << '\n';
  if (with_labels) {
    os << "labels:";
    for (const Label& l : g.labels()) os << ' ' << l;
    os << '\n';
  }
}

}  // namespace odag
