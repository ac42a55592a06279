#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "pbm/assignment.hpp"
#include "pbm/graph.hpp"
#include "pbm/likelihood.hpp"
#include "pbm/model.hpp"
#include "pbm/posterior.hpp"
#include "pbm/rng.hpp"

namespace pbm {

struct ChainConfig {
  std::int64_t steps = 1'000'000;
  std::int64_t burn_in = 100'000;
  std::int64_t thin = 10;
  std::uint64_t seed = 0;
  int chains = 4;

  void validate() const {
    if (steps <= 0) throw ConfigError("chain.steps must be positive");
    if (burn_in < 0 || burn_in >= steps)
      throw ConfigError("chain.burn_in must satisfy 0 <= burn_in < steps");
    if (thin <= 0 || thin > steps - burn_in)
      throw ConfigError("chain.thin must satisfy 1 <= thin <= steps - burn_in");
    if (chains < 1) throw ConfigError("chain.chains must be positive");
  }
};

// Retained draws as a multiset over canonical assignments.
struct SampleSet {
  std::map<ClassAssignment, std::int64_t> draws;
  std::int64_t total = 0;
};

// Log acceptance ratio of the proposal that swaps the classes of u
// (currently class 0) and v (currently class 1), computed from the O(n)
// pairs whose class relation flips.  The pair {u, v} stays cross-class.
inline double swap_log_ratio(const Graph& graph,
                             const std::vector<std::uint8_t>& bits, int u,
                             int v, const ModelParams& params) {
  const double log_p = std::log(params.p);
  const double log_1p = std::log(1.0 - params.p);
  const double log_q = std::log(params.q);
  const double log_1q = std::log(1.0 - params.q);
  const int vcount = graph.vertex_count();
  double delta = 0.0;
  for (int w = 0; w < vcount; ++w) {
    if (w == u || w == v) continue;
    const bool cw = bits[static_cast<std::size_t>(w)];
    // (u, w): u moves from class 0 to class 1.
    {
      const bool was_same = !cw;
      const bool has_edge = graph.edge(u, w);
      if (was_same)
        delta += has_edge ? (log_q - log_p) : (log_1q - log_1p);
      else
        delta += has_edge ? (log_p - log_q) : (log_1p - log_1q);
    }
    // (v, w): v moves from class 1 to class 0.
    {
      const bool was_same = cw;
      const bool has_edge = graph.edge(v, w);
      if (was_same)
        delta += has_edge ? (log_q - log_p) : (log_1q - log_1p);
      else
        delta += has_edge ? (log_p - log_q) : (log_1p - log_1q);
    }
  }
  return delta;
}

// Metropolis-Hastings over balanced assignments.  Proposal: swap the
// classes of a uniformly chosen class-0/class-1 vertex pair (symmetric).
// The walk runs on raw balanced vectors and draws are canonicalized on
// record; a swap never maps a vector to its own negation, so the induced
// chain on equivalence classes has the same symmetric kernel.  Chains
// use seeds cfg.seed + chain index and are merged.
//
// Boundary parameters (p or q in {0, 1}) require an explicit feasible
// start; proposals into zero-probability configurations then get a -inf
// ratio and are rejected, so the chain never leaves the support.
inline SampleSet mh_sampler(const Graph& graph, const ModelParams& params,
                            const ChainConfig& cfg,
                            const ClassAssignment* start = nullptr) {
  cfg.validate();
  if (params.n < 2) throw ConfigError("mh_sampler requires n >= 2");
  if (!params.interior()) {
    if (start == nullptr)
      throw ParameterError(
          "mh_sampler: boundary p or q requires an explicit start state");
    if (log_likelihood(graph, *start, params) == kNegInf)
      throw ParameterError("mh_sampler: start state has zero likelihood");
  }
  if (start != nullptr && start->n() != params.n)
    throw DimensionMismatch("mh_sampler: start state has wrong n");
  const int n = params.n;
  const int vcount = graph.vertex_count();
  SampleSet out;
  for (int chain = 0; chain < cfg.chains; ++chain) {
    SplitMix64 rng(cfg.seed + static_cast<std::uint64_t>(chain));
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(vcount), 0);
    if (start != nullptr) {
      for (int i = 0; i < vcount; ++i)
        bits[static_cast<std::size_t>(i)] = start->bit(i);
    } else {
      // Random balanced start.
      std::vector<int> perm(static_cast<std::size_t>(vcount));
      for (int i = 0; i < vcount; ++i) perm[static_cast<std::size_t>(i)] = i;
      for (int i = 0; i < vcount - 1; ++i) {
        const int j = i + static_cast<int>(rng.next_below(
                              static_cast<std::uint64_t>(vcount - i)));
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(j)]);
      }
      for (int i = 0; i < n; ++i)
        bits[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = 1;
    }
    std::vector<int> zeros, ones;
    zeros.reserve(static_cast<std::size_t>(n));
    ones.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < vcount; ++i)
      (bits[static_cast<std::size_t>(i)] ? ones : zeros).push_back(i);
    for (std::int64_t step = 0; step < cfg.steps; ++step) {
      const std::size_t zi =
          static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(n)));
      const std::size_t oi =
          static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(n)));
      const int u = zeros[zi], v = ones[oi];
      const double delta = swap_log_ratio(graph, bits, u, v, params);
      bool accept = delta >= 0.0;
      if (!accept) {
        const double r = rng.next_double();
        accept = r > 0.0 && std::log(r) < delta;
      }
      if (accept) {
        bits[static_cast<std::size_t>(u)] = 1;
        bits[static_cast<std::size_t>(v)] = 0;
        zeros[zi] = v;
        ones[oi] = u;
      }
      if (step >= cfg.burn_in && (step - cfg.burn_in) % cfg.thin == 0) {
        out.draws[canonicalize(bits)] += 1;
        out.total += 1;
      }
    }
  }
  return out;
}

// Most frequent draw; ties go to the lexicographically smallest (the map
// is ordered, so the first maximum).
inline ClassAssignment map_estimate(const SampleSet& samples) {
  if (samples.draws.empty()) throw Error("map_estimate: empty sample set");
  const ClassAssignment* best = nullptr;
  std::int64_t best_count = -1;
  for (const auto& [a, count] : samples.draws)
    if (count > best_count) {
      best = &a;
      best_count = count;
    }
  return *best;
}

// Empirical-frequency table over the sampled assignments, flagged
// approximate; log_evidence is not identified from draws and stays -inf.
inline PosteriorTable table_from_samples(const SampleSet& samples, int n) {
  if (samples.total <= 0) throw Error("table_from_samples: empty sample set");
  PosteriorTable table;
  table.n = n;
  table.approximate = true;
  const double log_total = std::log(static_cast<double>(samples.total));
  for (const auto& [a, count] : samples.draws) {
    table.assignments.push_back(a);
    table.log_weights.push_back(std::log(static_cast<double>(count)) - log_total);
  }
  return table;
}

inline void write_samples_csv(const SampleSet& samples, std::ostream& os) {
  os << "assignment,count\n";
  for (const auto& [a, count] : samples.draws)
    os << a.to_string() << "," << count << "\n";
}

}  // namespace pbm
