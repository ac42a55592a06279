#pragma once

#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pbm/assignment.hpp"
#include "pbm/errors.hpp"
#include "pbm/model.hpp"
#include "pbm/rng.hpp"

namespace pbm {

// Undirected simple graph on 2n labelled vertices; the upper triangle of
// the adjacency matrix is packed row-major (i < j) into 64-bit words.
class Graph {
 public:
  explicit Graph(int n)
      : n_(n), bits_((pair_count_of(n) + 63) / 64, 0) {
    if (n < 1) throw RangeError("Graph: n must be positive");
  }

  int n() const { return n_; }
  int vertex_count() const { return 2 * n_; }

  // (2n)(2n-1)/2 = 2n^2 - n potential edges.
  std::int64_t pair_count() const { return pair_count_of(n_); }

  // Row-major rank of the pair {i, j}, i < j, among all upper-triangle
  // pairs of a 2n-vertex graph.
  std::size_t pair_index(int i, int j) const {
    const std::int64_t v = vertex_count();
    return static_cast<std::size_t>(i * (2 * v - i - 1) / 2 + (j - i - 1));
  }

  bool edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    const std::size_t idx = pair_index(i, j);
    return (bits_[idx >> 6] >> (idx & 63)) & 1u;
  }

  void set_edge(int i, int j, bool present) {
    if (i == j) throw RangeError("Graph::set_edge: self-loops not allowed");
    if (i > j) std::swap(i, j);
    const std::size_t idx = pair_index(i, j);
    const std::uint64_t mask = std::uint64_t{1} << (idx & 63);
    if (present)
      bits_[idx >> 6] |= mask;
    else
      bits_[idx >> 6] &= ~mask;
  }

  std::int64_t edge_count() const {
    std::int64_t total = 0;
    for (auto w : bits_) total += std::popcount(w);
    return total;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  static std::int64_t pair_count_of(int n) {
    const std::int64_t v = 2 * static_cast<std::int64_t>(n);
    return v * (v - 1) / 2;
  }

  int n_;
  std::vector<std::uint64_t> bits_;
};

// Samples each pair {i, j} independently, row-major over i < j, so the
// seed fully determines the graph.
inline Graph sample_graph(const ModelParams& params,
                          const ClassAssignment& theta0, std::uint64_t seed) {
  if (params.n != theta0.n())
    throw DimensionMismatch("sample_graph: params.n = " +
                            std::to_string(params.n) + ", theta0.n = " +
                            std::to_string(theta0.n()));
  Graph g(params.n);
  SplitMix64 rng(seed);
  const int v = g.vertex_count();
  for (int i = 0; i < v; ++i) {
    const bool ci = theta0.bit(i);
    for (int j = i + 1; j < v; ++j) {
      const double prob = (ci == theta0.bit(j)) ? params.p : params.q;
      if (rng.bernoulli(prob)) g.set_edge(i, j, true);
    }
  }
  return g;
}

// Plain-text edge list: first line "2n <vertex-count>", then one "i j"
// per line with 0 <= i < j, sorted.  Round-trips bit-exactly.
inline void write_graph(const Graph& g, std::ostream& os) {
  os << "2n " << g.vertex_count() << "\n";
  const int v = g.vertex_count();
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (g.edge(i, j)) os << i << " " << j << "\n";
}

inline Graph read_graph(std::istream& is) {
  std::string line;
  long lineno = 0;
  if (!std::getline(is, line)) throw ParseError("empty graph file", 1);
  ++lineno;
  std::istringstream head(line);
  std::string tag;
  int vertices = 0;
  if (!(head >> tag >> vertices) || tag != "2n")
    throw ParseError("expected header '2n <vertex-count>'", lineno);
  if (vertices < 2 || vertices % 2 != 0)
    throw ParseError("vertex count must be a positive even number", lineno);
  Graph g(vertices / 2);
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    int i = 0, j = 0;
    if (!(ls >> i >> j)) throw ParseError("expected edge 'i j'", lineno);
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens after edge", lineno);
    if (i < 0 || j < 0 || i >= j || j >= vertices)
      throw ParseError("edge endpoints out of range or not i < j", lineno);
    g.set_edge(i, j, true);
  }
  return g;
}

inline void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path + " for writing");
  write_graph(g, os);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  return read_graph(is);
}

inline void write_assignment_file(const ClassAssignment& a,
                                  const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path + " for writing");
  os << a.to_string() << "\n";
}

inline ClassAssignment read_assignment_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty assignment file", 1);
  try {
    return assignment_from_string(line);
  } catch (const InvalidAssignment& e) {
    throw ParseError(e.what(), 1);
  }
}

}  // namespace pbm
