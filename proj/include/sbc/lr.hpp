#pragma once

// Littlewood-Richardson coefficients by explicit enumeration of LR tableaux,
// the closed form for hooks, and the star / diamond set products.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sbc/core.hpp"
#include "sbc/partitions.hpp"

namespace sbc {

namespace detail {

// Enumerates LR tableaux of skew shape ?/inner with the given content.
// Each value v is added as a horizontal strip (giving column-strict fillings);
// the lattice condition on the reverse reading word is checked pairwise for
// (v-1, v), which is sufficient. Rows are read top to bottom, right to left;
// within a row the v's sit right of the (v-1)'s, so the condition reads
//   sum_{r' <= r} strip_v(r') <= sum_{r' < r} strip_{v-1}(r')   for every r.
class LrEnumerator {
 public:
  LrEnumerator(const Partition& inner, const Partition& content, const Partition* bound)
      : content_(content.parts()), bound_(bound) {
    shape_ = inner.parts();
  }

  template <typename F>
  void run(F&& on_outer) {
    std::vector<int> no_prev;
    place_value(0, no_prev, on_outer);
  }

 private:
  template <typename F>
  void place_value(std::size_t v, const std::vector<int>& prev_strip, F& on_outer) {
    if (v == content_.size()) {
      on_outer(Partition(shape_));
      return;
    }
    std::vector<int> strip(shape_.size() + 1, 0);
    const std::vector<int> old = shape_;
    place_row(v, 0, content_[v], old, prev_strip, strip, 0, 0, on_outer);
  }

  template <typename F>
  void place_row(std::size_t v, std::size_t row, int remaining, const std::vector<int>& old,
                 const std::vector<int>& prev_strip, std::vector<int>& strip, long long placed_v,
                 long long placed_prev, F& on_outer) {
    if (remaining == 0) {
      // The lattice check for the untouched rows below is automatic.
      std::vector<int> saved = shape_;
      while (!shape_.empty() && shape_.back() == 0) shape_.pop_back();
      std::vector<int> this_strip = strip;
      place_value(v + 1, this_strip, on_outer);
      shape_ = std::move(saved);
      return;
    }
    if (row > old.size()) return;
    const int old_len = row < old.size() ? old[row] : 0;
    int max_len = row == 0 ? old_len + remaining : old[row - 1];
    if (bound_ != nullptr) max_len = std::min(max_len, (*bound_)[row]);
    const long long prev_before = placed_prev;  // (v-1)'s strictly above this row
    const long long prev_here = v > 0 && row < prev_strip.size() ? prev_strip[row] : 0;
    for (int add = std::min(remaining, max_len - old_len); add >= 0; --add) {
      if (v > 0 && placed_v + add > prev_before) continue;
      if (row == old.size() && add == 0) continue;  // a new row must be used or abandoned
      if (row == shape_.size()) shape_.push_back(0);
      shape_[row] = old_len + add;
      strip[row] = add;
      place_row(v, row + 1, remaining - add, old, prev_strip, strip, placed_v + add, prev_before + prev_here,
                on_outer);
      strip[row] = 0;
      shape_[row] = old_len;
      if (row == old.size()) shape_.pop_back();
    }
  }

  std::vector<int> content_;
  const Partition* bound_;
  std::vector<int> shape_;
};

inline void require_weights(int outer, int total) {
  if (outer != total) throw input_error("LR weight mismatch: outer weight differs from sum of inner weights");
}

}  // namespace detail

/// LR(lambda; mu, nu): the number of LR tableaux of shape lambda/mu and content nu.
inline Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  detail::require_weights(lambda.weight(), mu.weight() + nu.weight());
  if (!lambda.contains(mu)) return 0;
  std::uint64_t count = 0;
  detail::LrEnumerator e(mu, nu, &lambda);
  e.run([&](const Partition& outer) {
    if (outer == lambda) ++count;
  });
  return count;
}

/// The expansion s_mu * s_nu = sum LR(lambda; mu, nu) s_lambda, optionally
/// restricted to lambda inside `bound`.
inline std::map<Partition, Integer> lr_product(const Partition& mu, const Partition& nu,
                                               const std::optional<Partition>& bound = std::nullopt) {
  std::map<Partition, Integer> out;
  if (bound && !bound->contains(mu)) return out;
  detail::LrEnumerator e(mu, nu, bound ? &*bound : nullptr);
  e.run([&](const Partition& outer) { out[outer] += 1; });
  return out;
}

/// One step of the Young-subgroup induction: acc * s_mu, keeping only
/// shapes inside `bound`.
inline std::map<Partition, Integer> lr_fold_step(const std::map<Partition, Integer>& acc, const Partition& mu,
                                                 const std::optional<Partition>& bound = std::nullopt) {
  if (mu.empty()) return acc;
  std::map<Partition, Integer> next;
  for (const auto& [kappa, coeff] : acc)
    for (auto& [rho, c] : lr_product(kappa, mu, bound)) next[rho] += coeff * c;
  return next;
}

/// LR(lambda; mu_1, ..., mu_k): multiplicity of chi^lambda in the induction
/// from the Young subgroup. Folds left over the inners, keeping only
/// intermediate shapes contained in lambda. Empty inners are skipped.
inline Integer lr_multi(const Partition& lambda, const std::vector<Partition>& inners) {
  int total = 0;
  for (const auto& m : inners) total += m.weight();
  detail::require_weights(lambda.weight(), total);

  std::map<Partition, Integer> acc{{Partition{}, Integer(1)}};
  for (const auto& mu : inners) acc = lr_fold_step(acc, mu, lambda);
  auto it = acc.find(lambda);
  return it == acc.end() ? Integer(0) : it->second;
}

/// Closed form for hooks: LR(h; h_1, ..., h_t) = binomial(t-1, x - sum x_i).
inline Integer lr_hook(const HookPartition& h, const std::vector<HookPartition>& hooks) {
  int total = 0;
  int legs = 0;
  for (const auto& hi : hooks) {
    total += hi.n;
    legs += hi.x;
  }
  detail::require_weights(h.n, total);
  return binomial(static_cast<long long>(hooks.size()) - 1, h.x - legs);
}

/// chi^h restricted to the Young subgroup of the given shape, as a map from
/// hook tuples to multiplicities. Only hook tuples can occur.
inline std::map<std::vector<HookPartition>, Integer> restrict_hook_to_young(const HookPartition& h,
                                                                           const Composition& shape) {
  if (shape.weight() != h.n) throw input_error("Young shape must sum to the hook weight");
  // Zero entries contribute the empty partition and are dropped.
  std::vector<int> entries;
  for (int e : shape.entries)
    if (e > 0) entries.push_back(e);

  const std::size_t t = entries.size();
  std::map<std::vector<HookPartition>, Integer> out;
  std::vector<HookPartition> cur;
  auto rec = [&](auto& self, std::size_t i, int legs) -> void {
    // y = x - legs must end in [0, t-1]; legs only grow.
    if (legs > h.x) return;
    if (i == t) {
      Integer m = binomial(static_cast<long long>(t) - 1, h.x - legs);
      if (m != 0) out.emplace(cur, m);
      return;
    }
    for (int xi = 0; xi < entries[i]; ++xi) {
      cur.emplace_back(entries[i], xi);
      self(self, i + 1, legs + xi);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// A set of partitions of a common weight n.
struct PartitionSet {
  int n = 0;
  std::set<Partition> members;

  PartitionSet() = default;
  PartitionSet(int weight, std::set<Partition> m) : n(weight), members(std::move(m)) {
    for (const auto& p : members)
      if (p.weight() != n) throw input_error("PartitionSet member " + p.str() + " has the wrong weight");
  }

  bool contains(const Partition& p) const { return members.count(p) != 0; }
  std::size_t size() const { return members.size(); }

  friend bool operator==(const PartitionSet&, const PartitionSet&) = default;
};

/// B_n(t) as a set.
inline PartitionSet box_set(int n, int t) {
  auto parts = box_partitions(n, t);
  return {n, std::set<Partition>(parts.begin(), parts.end())};
}

/// The hooks of B_n(t).
inline PartitionSet hook_box_set(int n, int t) {
  std::set<Partition> m;
  if (t >= 1)
    for (const auto& h : hooks_in_box(n, std::min(t, n))) m.insert(h.to_partition());
  return {n, std::move(m)};
}

/// A * B = { lambda : LR(lambda; mu, nu) > 0 for some mu in A, nu in B }.
inline PartitionSet star(const PartitionSet& a, const PartitionSet& b) {
  PartitionSet out;
  out.n = a.n + b.n;
  for (const auto& mu : a.members)
    for (const auto& nu : b.members)
      for (const auto& [lambda, c] : lr_product(mu, nu)) out.members.insert(lambda);
  return out;
}

/// (A * B) restricted to hooks. Only hook candidates are tested.
inline PartitionSet diamond(const PartitionSet& a, const PartitionSet& b) {
  PartitionSet out;
  out.n = a.n + b.n;
  if (out.n == 0) {
    if (!a.members.empty() && !b.members.empty()) out.members.insert(Partition{});
    return out;
  }
  for (const auto& h : all_hooks(out.n)) {
    const Partition lambda = h.to_partition();
    bool hit = false;
    for (const auto& mu : a.members) {
      for (const auto& nu : b.members) {
        if (lr_coefficient(lambda, mu, nu) > 0) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (hit) out.members.insert(lambda);
  }
  return out;
}

}  // namespace sbc
