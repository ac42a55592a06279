#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbm/assignment.hpp"
#include "pbm/posterior.hpp"

namespace pbm {

enum class CredibleConstruction { minimal_order, minimal_diameter };

inline const char* to_string(CredibleConstruction c) {
  return c == CredibleConstruction::minimal_order ? "minimal-order"
                                                  : "minimal-diameter";
}

struct CredibleSet {
  std::vector<ClassAssignment> members;  // sorted lexicographically
  double level_requested = 0.0;
  double level_achieved = 0.0;
  CredibleConstruction construction = CredibleConstruction::minimal_order;
  int diameter = 0;
  bool approximate = false;  // built from MCMC frequencies
};

// Max pairwise distance; the whole space is a known shortcut.
inline int set_diameter(const std::vector<ClassAssignment>& members) {
  if (members.empty()) return 0;
  const int n = members.front().n();
  if (members.size() >= 2 &&
      members.size() == assignment_space_size(n))
    return n / 2;
  int diam = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      diam = std::max(diam, k_distance(members[i], members[j]));
  return diam;
}

// Greedy prefix in decreasing posterior weight (ties lexicographic, via
// stable sort over the lexicographic table order) until the requested
// mass is reached.
inline CredibleSet minimal_order_credible(const PosteriorTable& table,
                                          double level) {
  if (!(level > 0.0 && level <= 1.0))
    throw RangeError("minimal_order_credible: level must be in (0, 1]");
  std::vector<std::size_t> order(table.assignments.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return table.log_weights[a] > table.log_weights[b];
  });
  CredibleSet out;
  out.level_requested = level;
  out.construction = CredibleConstruction::minimal_order;
  out.approximate = table.approximate;
  double mass = 0.0;
  for (std::size_t idx : order) {
    out.members.push_back(table.assignments[idx]);
    mass += std::exp(table.log_weights[idx]);
    if (mass >= level) break;
  }
  // The full table carries mass one by the normalization contract, even
  // when the rounded sum lands just below it.
  if (out.members.size() == table.assignments.size()) mass = 1.0;
  out.level_achieved = std::min(mass, 1.0);
  std::sort(out.members.begin(), out.members.end());
  out.diameter = set_diameter(out.members);
  return out;
}

// Smallest-radius posterior ball reaching the level; radius first, then
// lexicographic centre.  Centres range over the table's assignments
// (for an exact table, all of Theta_n).
inline CredibleSet minimal_diameter_credible(const PosteriorTable& table,
                                             double level) {
  if (!(level > 0.0 && level <= 1.0))
    throw RangeError("minimal_diameter_credible: level must be in (0, 1]");
  const int n = table.n;
  CredibleSet out;
  out.level_requested = level;
  out.construction = CredibleConstruction::minimal_diameter;
  out.approximate = table.approximate;
  for (int radius = 0; radius <= n / 2; ++radius) {
    for (std::size_t c = 0; c < table.assignments.size(); ++c) {
      const ClassAssignment& centre = table.assignments[c];
      std::vector<double> lws;
      std::vector<std::size_t> ball;
      for (std::size_t i = 0; i < table.assignments.size(); ++i)
        if (k_distance(centre, table.assignments[i]) <= radius) {
          ball.push_back(i);
          lws.push_back(table.log_weights[i]);
        }
      double mass = std::exp(log_sum_exp(lws));
      if (ball.size() == table.assignments.size()) mass = 1.0;
      if (mass >= level) {
        for (std::size_t i : ball) out.members.push_back(table.assignments[i]);
        out.level_achieved = std::min(mass, 1.0);
        out.diameter = set_diameter(out.members);
        return out;
      }
    }
  }
  // level <= 1 and the table is normalized, so the full space always hits.
  throw Error("minimal_diameter_credible: no ball reaches the level");
}

struct ConfidenceReport {
  CredibleSet credible;
  int enlargement_radius = 0;
  std::vector<ClassAssignment> confidence_members;  // sorted
  int diameter = 0;              // of the confidence set
  double prior_mass_b = 0.0;     // Pi_n(k_n-ball) = (sum of ring sizes)/|Theta_n|
  double coverage_lower_bound = 0.0;
  bool vacuous = false;
};

struct CoverageBound {
  double value = 0.0;
  bool vacuous = false;
};

// 1 - a / b_n with b_n = |Theta_n|^{-1}; clamped to 0 and flagged when
// the deficit exceeds the prior point mass.
inline CoverageBound coverage_lower_bound(int n, double credible_deficit_a) {
  if (n < 1) throw RangeError("coverage_lower_bound: n must be positive");
  if (credible_deficit_a < 0.0)
    throw RangeError("coverage_lower_bound: deficit must be non-negative");
  double inv_b;  // |Theta_n|
  if (n <= 32)
    inv_b = static_cast<double>(assignment_space_size(n));
  else
    inv_b = std::exp(log_assignment_space_size(n));
  const double value = 1.0 - credible_deficit_a * inv_b;
  if (value < 0.0) return {0.0, true};
  return {value, false};
}

// Prior mass of a k_n-ball under the uniform prior.
inline double ball_prior_mass(int n, int k_n) {
  if (k_n < 0 || 2 * k_n > n) throw RangeError("ball_prior_mass: k_n out of range");
  if (n <= 32) {
    std::uint64_t ball = 0;
    for (int k = 0; k <= k_n; ++k) ball += ring_size(n, k);
    return static_cast<double>(ball) /
           static_cast<double>(assignment_space_size(n));
  }
  std::vector<double> logs;
  for (int k = 0; k <= k_n; ++k) {
    double lg = 2.0 * log_binomial(n, k);
    if (n % 2 == 0 && 2 * k == n) lg -= std::log(2.0);
    logs.push_back(lg);
  }
  return std::exp(log_sum_exp(logs) - log_assignment_space_size(n));
}

// k_n-enlargement: every assignment within distance k_n of some member.
// Coverage bookkeeping uses deficit a = 1 - level_achieved against the
// ball prior mass (the point mass when k_n = 0).
inline ConfidenceReport enlarge(const CredibleSet& credible, int k_n,
                                const std::vector<ClassAssignment>& universe) {
  ConfidenceReport report;
  report.credible = credible;
  report.enlargement_radius = k_n;
  if (credible.members.empty()) throw Error("enlarge: empty credible set");
  const int n = credible.members.front().n();
  if (k_n < 0 || 2 * k_n > n) throw RangeError("enlarge: k_n out of range");
  if (k_n == 0) {
    report.confidence_members = credible.members;
  } else {
    for (const auto& theta : universe)
      for (const auto& eta : credible.members)
        if (k_distance(theta, eta) <= k_n) {
          report.confidence_members.push_back(theta);
          break;
        }
    std::sort(report.confidence_members.begin(), report.confidence_members.end());
  }
  report.diameter = set_diameter(report.confidence_members);
  report.prior_mass_b = ball_prior_mass(n, k_n);
  const double deficit = 1.0 - credible.level_achieved;
  const double value = 1.0 - deficit / report.prior_mass_b;
  report.vacuous = value < 0.0;
  report.coverage_lower_bound = report.vacuous ? 0.0 : value;
  return report;
}

inline nlohmann::json confidence_report_json(const ConfidenceReport& report) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& a : report.confidence_members) members.push_back(a.to_string());
  return nlohmann::json{
      {"level_requested", report.credible.level_requested},
      {"level_achieved", report.credible.level_achieved},
      {"construction", to_string(report.credible.construction)},
      {"credible_member_count", report.credible.members.size()},
      {"credible_diameter", report.credible.diameter},
      {"diameter", report.diameter},
      {"k_n", report.enlargement_radius},
      {"member_count", report.confidence_members.size()},
      {"prior_mass_b", report.prior_mass_b},
      {"coverage_lower_bound", report.coverage_lower_bound},
      {"vacuous_flag", report.vacuous},
      {"approximate", report.credible.approximate},
      {"members", std::move(members)},
  };
}

inline void write_confidence_json(const ConfidenceReport& report,
                                  std::ostream& os) {
  os << confidence_report_json(report).dump(2) << "\n";
}

}  // namespace pbm
