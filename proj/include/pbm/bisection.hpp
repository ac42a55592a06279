#pragma once

#include <cstdint>
#include <vector>

#include "pbm/assignment.hpp"
#include "pbm/graph.hpp"
#include "pbm/rng.hpp"

namespace pbm {

inline std::int64_t between_edge_count(const Graph& graph,
                                       const ClassAssignment& theta) {
  if (graph.n() != theta.n())
    throw DimensionMismatch("between_edge_count: mismatched n");
  std::int64_t count = 0;
  const int v = graph.vertex_count();
  for (int i = 0; i < v; ++i) {
    const bool ci = theta.bit(i);
    for (int j = i + 1; j < v; ++j)
      if (ci != theta.bit(j) && graph.edge(i, j)) ++count;
  }
  return count;
}

// Argmin of the between-class edge count over all of Theta_n; ties go to
// the lexicographically smallest assignment (enumeration order).
inline ClassAssignment min_bisection_exact(
    const Graph& graph, std::uint64_t cap = kDefaultEnumerationCap) {
  const auto all = enumerate_assignments(graph.n(), cap);
  std::size_t best = 0;
  std::int64_t best_count = between_edge_count(graph, all[0]);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const std::int64_t c = between_edge_count(graph, all[i]);
    if (c < best_count) {
      best = i;
      best_count = c;
    }
  }
  return all[best];
}

// Kernighan-Lin-style local search: steepest single-pair swaps from a
// random balanced start, restarted `restarts` times.  Among local optima
// with equal cut size the lexicographically smallest wins.
inline ClassAssignment min_bisection_greedy(const Graph& graph, int restarts,
                                            std::uint64_t seed) {
  if (restarts < 1) throw RangeError("min_bisection_greedy: restarts must be >= 1");
  const int n = graph.n();
  const int vcount = graph.vertex_count();
  SplitMix64 rng(seed);

  // Cut-size change if u (class 0) and v (class 1) swap classes: pairs
  // (u,w) and (v,w) flip their relation, the pair {u,v} does not.
  auto swap_delta = [&](const std::vector<std::uint8_t>& bits, int u, int v) {
    std::int64_t delta = 0;
    for (int w = 0; w < vcount; ++w) {
      if (w == u || w == v) continue;
      const bool cw = bits[static_cast<std::size_t>(w)];
      if (graph.edge(u, w)) delta += cw ? -1 : +1;
      if (graph.edge(v, w)) delta += cw ? +1 : -1;
    }
    return delta;
  };

  ClassAssignment best(0, {});
  std::int64_t best_count = -1;
  for (int restart = 0; restart < restarts; ++restart) {
    ClassAssignment current = sample_uniform_assignment(n, rng);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(vcount));
    for (int i = 0; i < vcount; ++i)
      bits[static_cast<std::size_t>(i)] = current.bit(i);
    std::int64_t cut = between_edge_count(graph, current);
    for (;;) {
      std::int64_t best_delta = 0;
      int best_u = -1, best_v = -1;
      for (int u = 0; u < vcount; ++u) {
        if (bits[static_cast<std::size_t>(u)]) continue;
        for (int v = 0; v < vcount; ++v) {
          if (!bits[static_cast<std::size_t>(v)]) continue;
          const std::int64_t d = swap_delta(bits, u, v);
          if (d < best_delta) {
            best_delta = d;
            best_u = u;
            best_v = v;
          }
        }
      }
      if (best_u < 0) break;
      bits[static_cast<std::size_t>(best_u)] = 1;
      bits[static_cast<std::size_t>(best_v)] = 0;
      cut += best_delta;
    }
    ClassAssignment local = canonicalize(bits);
    if (best_count < 0 || cut < best_count ||
        (cut == best_count && local < best)) {
      best = local;
      best_count = cut;
    }
  }
  return best;
}

}  // namespace pbm
