#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "pbm/assignment.hpp"
#include "pbm/graph.hpp"
#include "pbm/likelihood.hpp"
#include "pbm/model.hpp"
#include "pbm/numerics.hpp"

namespace pbm {

// Shortest round-trip decimal representation (17 significant digits at
// most); used everywhere a float is serialized.
inline std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

inline double parse_double(const std::string& s, long lineno) {
  double x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("invalid floating-point value '" + s + "'", lineno);
  return x;
}

// Posterior over the full lexicographic enumeration of Theta_n under the
// uniform prior.  log_weights are normalized (logsumexp = 0);
// log_evidence is the log prior-predictive density of the graph.
struct PosteriorTable {
  std::vector<ClassAssignment> assignments;
  std::vector<double> log_weights;
  double log_evidence = kNegInf;
  int n = 0;
  // True when the table holds empirical MCMC frequencies instead of an
  // exact enumeration.
  bool approximate = false;

  // Index of `a` in the (sorted) assignment list, or -1.
  std::int64_t index_of(const ClassAssignment& a) const {
    auto it = std::lower_bound(assignments.begin(), assignments.end(), a);
    if (it == assignments.end() || !(*it == a)) return -1;
    return it - assignments.begin();
  }

  double weight_of(const ClassAssignment& a) const {
    const auto idx = index_of(a);
    return idx < 0 ? 0.0 : std::exp(log_weights[static_cast<std::size_t>(idx)]);
  }
};

inline PosteriorTable exact_posterior(const Graph& graph,
                                      const ModelParams& params,
                                      std::uint64_t cap = kDefaultEnumerationCap) {
  if (graph.n() != params.n)
    throw DimensionMismatch("exact_posterior: graph.n = " +
                            std::to_string(graph.n()) + ", params.n = " +
                            std::to_string(params.n));
  PosteriorTable table;
  table.n = params.n;
  table.assignments = enumerate_assignments(params.n, cap);
  table.log_weights.resize(table.assignments.size());
  for (std::size_t i = 0; i < table.assignments.size(); ++i)
    table.log_weights[i] = log_likelihood(graph, table.assignments[i], params);
  const double log_norm = log_sum_exp(table.log_weights);
  if (log_norm == kNegInf)
    throw UndefinedPosterior(
        "observed graph has zero probability under every assignment");
  for (auto& lw : table.log_weights) lw -= log_norm;
  // Prior predictive: mean of the likelihoods under the uniform prior.
  table.log_evidence = log_norm - log_assignment_space_size(params.n);
  return table;
}

inline double posterior_mass(const PosteriorTable& table,
                             const std::vector<ClassAssignment>& subset) {
  std::vector<double> members;
  members.reserve(subset.size());
  for (const auto& a : subset) {
    const auto idx = table.index_of(a);
    if (idx >= 0) members.push_back(table.log_weights[static_cast<std::size_t>(idx)]);
  }
  if (members.empty()) return 0.0;
  return std::exp(log_sum_exp(members));
}

template <typename Predicate>
double posterior_mass_if(const PosteriorTable& table, Predicate&& pred) {
  std::vector<double> members;
  for (std::size_t i = 0; i < table.assignments.size(); ++i)
    if (pred(table.assignments[i])) members.push_back(table.log_weights[i]);
  if (members.empty()) return 0.0;
  return std::exp(log_sum_exp(members));
}

// Argmax of the posterior; ties go to the lexicographically smallest
// canonical bit string (the enumeration is sorted, so the first maximum).
inline ClassAssignment map_estimate(const PosteriorTable& table) {
  if (table.assignments.empty()) throw Error("map_estimate: empty table");
  std::size_t best = 0;
  for (std::size_t i = 1; i < table.log_weights.size(); ++i)
    if (table.log_weights[i] > table.log_weights[best]) best = i;
  return table.assignments[best];
}

// CSV export: "assignment,log_weight" rows in table order, preceded by a
// comment line carrying the evidence so the file round-trips.
inline void write_posterior_csv(const PosteriorTable& table, std::ostream& os) {
  os << "# log_evidence=" << format_double(table.log_evidence) << "\n";
  if (table.approximate) os << "# approximate=1\n";
  os << "assignment,log_weight\n";
  for (std::size_t i = 0; i < table.assignments.size(); ++i)
    os << table.assignments[i].to_string() << ","
       << format_double(table.log_weights[i]) << "\n";
}

inline PosteriorTable read_posterior_csv(std::istream& is) {
  PosteriorTable table;
  std::string line;
  long lineno = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line.rfind("# log_evidence=", 0) == 0) {
      table.log_evidence = parse_double(line.substr(15), lineno);
      continue;
    }
    if (line.rfind("# approximate=", 0) == 0) {
      table.approximate = line.substr(14) == "1";
      continue;
    }
    if (!header_seen) {
      if (line != "assignment,log_weight")
        throw ParseError("expected header 'assignment,log_weight'", lineno);
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ParseError("expected 'assignment,log_weight'", lineno);
    ClassAssignment a = [&] {
      try {
        return assignment_from_string(line.substr(0, comma));
      } catch (const InvalidAssignment& e) {
        throw ParseError(e.what(), lineno);
      }
    }();
    table.assignments.push_back(std::move(a));
    table.log_weights.push_back(parse_double(line.substr(comma + 1), lineno));
  }
  if (!header_seen) throw ParseError("missing header", lineno == 0 ? 1 : lineno);
  if (!table.assignments.empty()) table.n = table.assignments.front().n();
  return table;
}

}  // namespace pbm
