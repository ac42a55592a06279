#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pbm/assignment.hpp"
#include "pbm/graph.hpp"
#include "pbm/model.hpp"
#include "pbm/numerics.hpp"

namespace pbm {

// Edge counts split by the class relation a given assignment induces.
struct SuffStats {
  std::int64_t within = 0;        // edges joining same-class pairs
  std::int64_t between = 0;       // edges joining cross-class pairs
  std::int64_t within_pairs = 0;  // n(n-1)
  std::int64_t between_pairs = 0; // n^2
};

inline SuffStats suff_stats(const Graph& graph, const ClassAssignment& theta) {
  if (graph.n() != theta.n())
    throw DimensionMismatch("suff_stats: graph.n = " + std::to_string(graph.n()) +
                            ", theta.n = " + std::to_string(theta.n()));
  const std::int64_t n = theta.n();
  SuffStats s;
  s.within_pairs = n * (n - 1);
  s.between_pairs = n * n;
  const int v = graph.vertex_count();
  for (int i = 0; i < v; ++i) {
    const bool ci = theta.bit(i);
    for (int j = i + 1; j < v; ++j)
      if (graph.edge(i, j)) ((ci == theta.bit(j)) ? s.within : s.between) += 1;
  }
  return s;
}

// Log of prod_{i<j} Q_ij^{X_ij} (1 - Q_ij)^{1-X_ij}, with 0 log 0 = 0;
// -inf signals a zero-probability configuration under boundary p or q.
inline double log_likelihood(const Graph& graph, const ClassAssignment& theta,
                             const ModelParams& params) {
  if (graph.n() != params.n || theta.n() != params.n)
    throw DimensionMismatch("log_likelihood: mismatched n");
  if (params.p == params.q) {
    // Erdos-Renyi submodel: only the total edge count matters.  Evaluating
    // on totals keeps the result bitwise identical across assignments.
    const std::int64_t edges = graph.edge_count();
    const std::int64_t pairs = graph.pair_count();
    return xlogy(edges, params.p) + xlogy(pairs - edges, 1.0 - params.p);
  }
  const SuffStats s = suff_stats(graph, theta);
  return xlogy(s.within, params.p) +
         xlogy(s.within_pairs - s.within, 1.0 - params.p) +
         xlogy(s.between, params.q) +
         xlogy(s.between_pairs - s.between, 1.0 - params.q);
}

// Pairs whose class relation flips between theta0 and theta: `to_between`
// is within under theta0 and between under theta, `to_within` the
// converse.  Both have exactly 2k(n-k) elements.
struct ExchangeSets {
  std::vector<std::pair<int, int>> to_between;
  std::vector<std::pair<int, int>> to_within;
};

inline ExchangeSets exchange_sets(const ClassAssignment& theta,
                                  const ClassAssignment& theta0) {
  if (theta.n() != theta0.n())
    throw DimensionMismatch("exchange_sets: mismatched n");
  // Pick the representative pairing that realizes the pair-exchange
  // distance: if more than half of theta0's zero class moved, compare
  // against the negated representative instead.
  const int n = theta.n();
  const int v = theta.vertex_count();
  int h = 0;
  for (int i = 0; i < v; ++i)
    if (!theta0.bit(i) && theta.bit(i)) ++h;
  const bool flip = h > n - h;
  ExchangeSets out;
  for (int i = 0; i < v; ++i) {
    const bool c0i = theta0.bit(i);
    const bool ci = flip ? !theta.bit(i) : theta.bit(i);
    for (int j = i + 1; j < v; ++j) {
      const bool same0 = (c0i == theta0.bit(j));
      const bool same1 = (ci == (flip ? !theta.bit(j) : theta.bit(j)));
      if (same0 && !same1) out.to_between.emplace_back(i, j);
      else if (!same0 && same1) out.to_within.emplace_back(i, j);
    }
  }
  return out;
}

// Log-odds gap log((1-p)/p * q/(1-q)); +-inf at boundary parameters.
// Exactly zero when p == q (summation order would otherwise leave an
// ulp-sized residue).
inline double log_odds_gap(double p, double q) {
  if (p == q) return 0.0;
  return std::log(1.0 - p) - std::log(p) + std::log(q) - std::log(1.0 - q);
}

// log p_theta(X) - log p_theta0(X).  For interior parameters this is
// (S - T) * log_odds_gap with S, T the edge counts over the exchange
// sets; at boundary parameters it falls back to the difference of
// log-likelihoods, restricted to the dominated component (ratio of two
// impossible configurations is taken as 0).
inline double log_likelihood_ratio(const Graph& graph,
                                   const ClassAssignment& theta,
                                   const ClassAssignment& theta0,
                                   const ModelParams& params) {
  if (graph.n() != params.n || theta.n() != params.n || theta0.n() != params.n)
    throw DimensionMismatch("log_likelihood_ratio: mismatched n");
  if (!params.interior()) {
    const double lt = log_likelihood(graph, theta, params);
    const double l0 = log_likelihood(graph, theta0, params);
    if (lt == kNegInf && l0 == kNegInf) return 0.0;
    return lt - l0;
  }
  const ExchangeSets ex = exchange_sets(theta, theta0);
  std::int64_t s = 0, t = 0;
  for (auto [i, j] : ex.to_between)
    if (graph.edge(i, j)) ++s;
  for (auto [i, j] : ex.to_within)
    if (graph.edge(i, j)) ++t;
  return static_cast<double>(s - t) * log_odds_gap(params.p, params.q);
}

}  // namespace pbm
