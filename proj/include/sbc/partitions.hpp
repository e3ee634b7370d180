#pragma once

// Partitions, hooks, compositions and binary expansions.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "sbc/core.hpp"

namespace sbc {

/// A weakly decreasing sequence of positive integers. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Throws input_error unless `parts` is weakly decreasing. Trailing zeros
  /// are dropped.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw input_error("partition parts must be weakly decreasing and positive");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// First part, 0 for the empty partition.
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Part i (0-based); 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(first()), 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
  }

  bool is_hook() const { return weight_ > 0 && std::all_of(parts_.begin() + 1, parts_.end(), [](int p) { return p == 1; }); }

  /// Young-diagram containment.
  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.parts_.size(); ++i)
      if (inner.parts_[i] > parts_[i]) return false;
    return true;
  }

  /// Exponential notation, e.g. (6,1^2); the empty partition is ().
  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (i > 0) out += ',';
      out += std::to_string(parts_[i]);
      if (j - i > 1) out += '^' + std::to_string(j - i);
      i = j;
    }
    return out + ')';
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// The hook (n-x, 1^x), stored by weight n and leg length x.
struct HookPartition {
  int n = 1;
  int x = 0;

  HookPartition() = default;
  HookPartition(int weight, int leg) : n(weight), x(leg) {
    if (n < 1 || x < 0 || x > n - 1) throw input_error("hook requires n >= 1 and 0 <= x <= n-1");
  }

  int arm() const { return n - x; }

  Partition to_partition() const {
    std::vector<int> parts(static_cast<std::size_t>(x) + 1, 1);
    parts.front() = n - x;
    return Partition(std::move(parts));
  }

  static HookPartition from_partition(const Partition& p) {
    if (!p.is_hook()) throw input_error("partition " + p.str() + " is not a hook");
    return HookPartition(p.weight(), p.length() - 1);
  }

  std::string str() const { return to_partition().str(); }

  friend auto operator<=>(const HookPartition&, const HookPartition&) = default;
};

/// A finite sequence of non-negative integers.
struct Composition {
  std::vector<int> entries;

  Composition() = default;
  explicit Composition(std::vector<int> e) : entries(std::move(e)) {
    if (std::any_of(entries.begin(), entries.end(), [](int v) { return v < 0; }))
      throw input_error("composition entries must be non-negative");
  }
  int weight() const { return std::accumulate(entries.begin(), entries.end(), 0); }

  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// n = sum 2^{k_i} with k_1 > ... > k_t >= 0.
struct BinaryExpansion {
  std::vector<unsigned> exponents;

  int value() const {
    int v = 0;
    for (unsigned e : exponents) v += 1 << e;
    return v;
  }
  std::size_t size() const { return exponents.size(); }

  friend auto operator<=>(const BinaryExpansion&, const BinaryExpansion&) = default;
};

inline bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

/// log2 of a power of two.
inline unsigned exponent_of(long long n) {
  if (!is_power_of_two(n)) throw input_error(std::to_string(n) + " is not a power of 2");
  unsigned e = 0;
  while ((1LL << e) < n) ++e;
  return e;
}

inline BinaryExpansion binary_expansion(int n) {
  if (n < 1) throw input_error("binary expansion requires n >= 1");
  BinaryExpansion out;
  for (int e = 30; e >= 0; --e)
    if ((n >> e) & 1) out.exponents.push_back(static_cast<unsigned>(e));
  return out;
}

/// Digits (a_width, ..., a_0) of x, most significant first, leading zeros kept.
inline std::vector<std::uint8_t> binary_digits(long long x, unsigned width) {
  if (width > 62 || x < 0 || x >= (1LL << (width + 1)))
    throw input_error("binary_digits: x out of range for width " + std::to_string(width));
  std::vector<std::uint8_t> digits(width + 1);
  for (unsigned i = 0; i <= width; ++i) digits[width - i] = static_cast<std::uint8_t>((x >> i) & 1);
  return digits;
}

inline HookPartition conjugate_hook(const HookPartition& h) { return {h.n, h.n - 1 - h.x}; }

/// Whether the diagram of p fits in a t x t square.
inline bool in_box(const Partition& p, int t) { return p.first() <= t && p.length() <= t; }

inline bool in_box(const HookPartition& h, int t) { return h.arm() <= t && h.x + 1 <= t; }

/// All hooks of n inside a t x t square, sorted by leg length.
inline std::vector<HookPartition> hooks_in_box(int n, int t) {
  if (n < 1 || t < 1 || t > n) throw input_error("hooks_in_box requires 1 <= t <= n");
  std::vector<HookPartition> out;
  for (int x = std::max(0, n - t); x <= std::min(n - 1, t - 1); ++x) out.emplace_back(n, x);
  return out;
}

inline std::vector<HookPartition> all_hooks(int n) { return hooks_in_box(n, n); }

/// t choose y, zero whenever y lies outside [0, t].
inline Integer binomial(long long t, long long y) {
  if (t < 0 || y < 0 || y > t) return 0;
  y = std::min(y, t - y);
  Integer out = 1;
  for (long long i = 1; i <= y; ++i) {
    out *= t - y + i;
    out /= i;
  }
  return out;
}

/// Calls f on every partition of n with first part <= max_part and at most
/// max_len parts, in lexicographically decreasing order.
inline void for_each_partition(int n, int max_part, int max_len, const std::function<void(const Partition&)>& f) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      f(Partition(cur));
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n < 0) return;
  rec(n, max_part);
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, n, n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

/// B_n(t): partitions of n fitting in a t x t square.
inline std::vector<Partition> box_partitions(int n, int t) {
  std::vector<Partition> out;
  for_each_partition(n, t, t, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace sbc
