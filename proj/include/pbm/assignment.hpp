#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbm/errors.hpp"
#include "pbm/numerics.hpp"
#include "pbm/rng.hpp"

namespace pbm {

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

// A balanced two-colouring of 2n vertices, stored as the canonical
// representative of its equivalence class under global label flip:
// bit 0 is always 0, and exactly n of the 2n bits are set.
// Bit i lives at words()[i / 64], position i % 64.
class ClassAssignment {
 public:
  ClassAssignment(int n, std::vector<std::uint64_t> words)
      : n_(n), words_(std::move(words)) {}

  int n() const { return n_; }
  int vertex_count() const { return 2 * n_; }

  bool bit(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(2 * n_), '0');
    for (int i = 0; i < 2 * n_; ++i)
      if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  friend bool operator==(const ClassAssignment& a, const ClassAssignment& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  // Lexicographic order on the bit string; earlier vertices are more
  // significant, so words cannot be compared as integers directly.
  friend bool operator<(const ClassAssignment& a, const ClassAssignment& b) {
    for (std::size_t w = 0; w < a.words_.size() && w < b.words_.size(); ++w) {
      const std::uint64_t x = a.words_[w], y = b.words_[w];
      if (x != y) {
        const int pos = std::countr_zero(x ^ y);
        return ((x >> pos) & 1u) == 0;
      }
    }
    return a.words_.size() < b.words_.size();
  }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

namespace detail {

inline std::size_t word_count(int vertices) {
  return (static_cast<std::size_t>(vertices) + 63) / 64;
}

inline void negate_in_place(std::vector<std::uint64_t>& words, int vertices) {
  for (auto& w : words) w = ~w;
  const int tail = vertices & 63;
  if (tail != 0) words.back() &= (std::uint64_t{1} << tail) - 1;
}

}  // namespace detail

// Builds the canonical representative of {raw, ~raw}.  The input must
// have even length and as many ones as zeroes.
inline ClassAssignment canonicalize(std::span<const std::uint8_t> raw_bits) {
  const std::size_t len = raw_bits.size();
  if (len == 0 || len % 2 != 0)
    throw InvalidAssignment("assignment length must be even and positive, got " +
                            std::to_string(len));
  std::size_t ones = 0;
  for (auto b : raw_bits) ones += (b != 0);
  if (ones * 2 != len)
    throw InvalidAssignment("assignment must have as many ones as zeroes (" +
                            std::to_string(ones) + " ones in " +
                            std::to_string(len) + " bits)");
  const int vertices = static_cast<int>(len);
  std::vector<std::uint64_t> words(detail::word_count(vertices), 0);
  for (int i = 0; i < vertices; ++i)
    if (raw_bits[static_cast<std::size_t>(i)])
      words[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  if (raw_bits[0]) detail::negate_in_place(words, vertices);
  return ClassAssignment(vertices / 2, std::move(words));
}

inline ClassAssignment canonicalize(const std::vector<std::uint8_t>& raw_bits) {
  return canonicalize(std::span<const std::uint8_t>(raw_bits));
}

inline ClassAssignment assignment_from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw InvalidAssignment(std::string("invalid character '") + c +
                              "' in assignment string");
    bits.push_back(c == '1');
  }
  return canonicalize(bits);
}

// Pair-exchange distance between equivalence classes: with
// h = #{i : theta_i = 0, eta_i = 1}, the distance is min(h, n - h),
// in {0, ..., floor(n/2)}.
inline int k_distance(const ClassAssignment& theta, const ClassAssignment& eta) {
  if (theta.n() != eta.n())
    throw DimensionMismatch("k_distance: assignments have n = " +
                            std::to_string(theta.n()) + " and " +
                            std::to_string(eta.n()));
  const auto& a = theta.words();
  const auto& b = eta.words();
  int h = 0;
  for (std::size_t w = 0; w < a.size(); ++w)
    h += std::popcount(~a[w] & b[w]);
  // ~a has phantom high bits, but b is zero there, so the AND masks them.
  return std::min(h, theta.n() - h);
}

// Fraction of matching vertex classes, |sum_i (-1)^theta_i (-1)^eta_i| / 2n.
// Equals 1 - 2 k_distance / n regardless of representative choice.
inline double overlap(const ClassAssignment& theta_hat,
                      const ClassAssignment& theta0) {
  if (theta_hat.n() != theta0.n())
    throw DimensionMismatch("overlap: assignments have n = " +
                            std::to_string(theta_hat.n()) + " and " +
                            std::to_string(theta0.n()));
  const int v = theta_hat.vertex_count();
  int signed_sum = 0;
  for (int i = 0; i < v; ++i)
    signed_sum += (theta_hat.bit(i) == theta0.bit(i)) ? 1 : -1;
  return static_cast<double>(std::abs(signed_sum)) / static_cast<double>(v);
}

// |Theta_n| = C(2n, n) / 2 = C(2n - 1, n).
inline std::uint64_t assignment_space_size(int n) {
  if (n < 1) throw RangeError("assignment_space_size: n must be positive");
  return binomial_exact(2 * n - 1, n);
}

inline double log_assignment_space_size(int n) {
  if (n < 1) throw RangeError("log_assignment_space_size: n must be positive");
  return log_binomial(2 * n - 1, n);
}

// |V_{n,k}|: C(n,k)^2 for k < n/2, half that on the top ring of even n.
inline std::uint64_t ring_size(int n, int k) {
  if (k < 0 || 2 * k > n) throw RangeError("ring_size: k out of range");
  const std::uint64_t c = binomial_exact(n, k);
  if (n % 2 == 0 && 2 * k == n) return c * c / 2;
  return c * c;
}

// All canonical assignments in lexicographic bit-string order.  The count
// C(2n-1, n) must not exceed `cap`.
inline std::vector<ClassAssignment> enumerate_assignments(
    int n, std::uint64_t cap = kDefaultEnumerationCap) {
  if (n < 1) throw RangeError("enumerate_assignments: n must be positive");
  std::uint64_t count;
  try {
    count = assignment_space_size(n);
  } catch (const RangeError&) {
    throw EnumerationTooLarge("enumeration of " + std::to_string(n) +
                              " exceeds the cap of " + std::to_string(cap) +
                              " assignments");
  }
  if (count > cap)
    throw EnumerationTooLarge("enumeration needs " + std::to_string(count) +
                              " assignments, above the cap of " +
                              std::to_string(cap));
  std::vector<ClassAssignment> out;
  out.reserve(count);
  const int vertices = 2 * n;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(vertices), 0);
  // Depth-first placement, zero branch before one branch, yields
  // lexicographic order directly.  Bit 0 stays 0 (canonical form).
  auto rec = [&](auto&& self, int pos, int zeros_left, int ones_left) -> void {
    if (pos == vertices) {
      std::vector<std::uint64_t> words(detail::word_count(vertices), 0);
      for (int i = 0; i < vertices; ++i)
        if (bits[static_cast<std::size_t>(i)])
          words[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1}
                                                     << (i & 63);
      out.emplace_back(n, std::move(words));
      return;
    }
    if (zeros_left > 0) {
      bits[static_cast<std::size_t>(pos)] = 0;
      self(self, pos + 1, zeros_left - 1, ones_left);
    }
    if (ones_left > 0) {
      bits[static_cast<std::size_t>(pos)] = 1;
      self(self, pos + 1, zeros_left, ones_left - 1);
      bits[static_cast<std::size_t>(pos)] = 0;
    }
  };
  bits[0] = 0;
  rec(rec, 1, n - 1, n);
  return out;
}

// All assignments at pair-exchange distance exactly k from `center`,
// sorted lexicographically.
inline std::vector<ClassAssignment> enumerate_ring(const ClassAssignment& center,
                                                   int k) {
  const int n = center.n();
  if (k < 0 || 2 * k > n) throw RangeError("enumerate_ring: k out of range");
  if (k == 0) return {center};
  std::vector<int> zeros, ones;
  zeros.reserve(static_cast<std::size_t>(n));
  ones.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < center.vertex_count(); ++i)
    (center.bit(i) ? ones : zeros).push_back(i);

  std::vector<ClassAssignment> out;
  std::vector<std::uint8_t> base(static_cast<std::size_t>(center.vertex_count()));
  for (int i = 0; i < center.vertex_count(); ++i)
    base[static_cast<std::size_t>(i)] = center.bit(i);

  std::vector<int> pick_z(static_cast<std::size_t>(k)), pick_o(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick_z[static_cast<std::size_t>(i)] = i;
  auto next_combination = [&](std::vector<int>& idx) -> bool {
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    return true;
  };
  do {
    for (int i = 0; i < k; ++i) pick_o[static_cast<std::size_t>(i)] = i;
    do {
      std::vector<std::uint8_t> bits = base;
      for (int i = 0; i < k; ++i) {
        bits[static_cast<std::size_t>(zeros[static_cast<std::size_t>(
            pick_z[static_cast<std::size_t>(i)])])] = 1;
        bits[static_cast<std::size_t>(ones[static_cast<std::size_t>(
            pick_o[static_cast<std::size_t>(i)])])] = 0;
      }
      out.push_back(canonicalize(bits));
    } while (next_combination(pick_o));
  } while (next_combination(pick_z));

  std::sort(out.begin(), out.end());
  if (n % 2 == 0 && 2 * k == n)  // top ring: (A,B) and its complement coincide
    out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Uniform draw from Theta_n: random balanced raw vector, canonicalized.
// Both representatives of a class are equally likely, so classes are
// uniform.
inline ClassAssignment sample_uniform_assignment(int n, SplitMix64& rng) {
  const int vertices = 2 * n;
  std::vector<int> perm(static_cast<std::size_t>(vertices));
  for (int i = 0; i < vertices; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < n; ++i) {
    const int j =
        i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(vertices - i)));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(vertices), 0);
  for (int i = 0; i < n; ++i)
    bits[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = 1;
  return canonicalize(bits);
}

}  // namespace pbm
