#pragma once

// Box thresholds: H_n^k, the hooks of n whose Sylow restriction has a
// constituent of degree 2^k, equals the hooks inside a T_n^k x T_n^k square.
//
// For n = 2^e the threshold t_e^k follows a recursion in e whose correction
// terms delta come from the oracle at 2^{e-1}; for general n the threshold
// is the best split of k across the binary digits of n.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbc/branching.hpp"
#include "sbc/core.hpp"
#include "sbc/oracle.hpp"
#include "sbc/partitions.hpp"
#include "sbc/wreath.hpp"

namespace sbc {

/// Raised when a threshold needs the oracle at a level above the cap.
class oracle_horizon : public resource_limit {
 public:
  oracle_horizon(unsigned level, const std::string& what)
      : resource_limit(what + " requires oracle at 2^" + std::to_string(level)), level_(level) {}
  unsigned level() const { return level_; }

 private:
  unsigned level_;
};

inline unsigned alpha_pow2(unsigned e) { return alpha(1LL << e); }

/// Memoized t_e^k and delta_e^w. Safe for concurrent use.
class ThresholdTable {
 public:
  /// t_e^k with H_{2^e}^k = hooks of 2^e in a t x t square.
  long long t(unsigned e, unsigned k) {
    if (e > 40) throw input_error("exponent too large");
    if (k > alpha_pow2(e))
      throw input_error("k = " + std::to_string(k) + " exceeds alpha(2^" + std::to_string(e) + ")");
    if (auto v = lookup(t_cache_, {e, k})) return *v;

    const long long full = 1LL << e;
    long long result = 0;
    if (k == 0)
      result = full;
    else if (k <= 2)
      result = full - 1;  // k = 2 only occurs for e >= 3
    else {
      const unsigned a = alpha_pow2(e - 1);
      std::optional<long long> pairs;
      for (unsigned i = 0; i <= a && i <= k - 1; ++i) {
        const unsigned j = k - 1 - i;
        if (j > a || i >= j) continue;
        const long long v = t(e - 1, i) + t(e - 1, j);
        pairs = std::max(pairs.value_or(v), v);
      }
      if ((k - 1) % 2 == 0 && (k - 1) / 2 <= a) {
        const unsigned w = (k - 1) / 2;
        const long long doubled = 2 * t(e - 1, w);
        // delta is 0 or -1, so it only matters when the pair term is below 2t.
        if (pairs && *pairs >= doubled)
          result = *pairs;
        else
          result = std::max(pairs.value_or(doubled + delta(e - 1, w)), doubled + delta(e - 1, w));
      } else {
        if (!pairs) throw consistency_error("empty threshold recursion at e=" + std::to_string(e));
        result = *pairs;
      }
    }
    store(t_cache_, {e, k}, result);
    return result;
  }

  /// delta_e^w: 0 when chi^{(t, 1^{2^e - t})}|P_{2^e} (t = t_e^w) has at
  /// least two distinct constituents of degree 2^w, -1 when it has one.
  int delta(unsigned e, unsigned w) {
    if (w > alpha_pow2(e)) throw input_error("w exceeds alpha(2^e)");
    if (auto v = lookup(delta_cache_, {e, w})) return static_cast<int>(*v);
    if (e > level_cap() || e > 30) throw oracle_horizon(e, "delta_" + std::to_string(e) + "^" + std::to_string(w));
    const long long tw = t(e, w);
    const int n = 1 << e;
    const auto dec = restrict_oracle(HookPartition(n, static_cast<int>(n - tw)));
    const std::size_t count = degree_profile(dec).distinct_at(w);
    if (count == 0)
      throw consistency_error("hook at threshold t_" + std::to_string(e) + "^" + std::to_string(w) +
                              " has no constituent of degree 2^" + std::to_string(w));
    const int d = count >= 2 ? 0 : -1;
    store(delta_cache_, {e, w}, d);
    return d;
  }

  /// T_n^k = max over splits k = j_1 + ... + j_r of sum t_{e_i}^{j_i}.
  long long T(int n, unsigned k) {
    if (n < 1) throw input_error("T requires n >= 1");
    if (k > alpha(n)) throw input_error("k = " + std::to_string(k) + " exceeds alpha(" + std::to_string(n) + ")");
    const auto exps = binary_expansion(n).exponents;
    // best[s] = max threshold sum using the digits seen so far with budget s.
    std::vector<std::optional<long long>> best(k + 1);
    best[0] = 0;
    for (unsigned e : exps) {
      std::vector<std::optional<long long>> next(k + 1);
      for (unsigned s = 0; s <= k; ++s) {
        if (!best[s]) continue;
        for (unsigned j = 0; j <= alpha_pow2(e) && s + j <= k; ++j) {
          const long long v = *best[s] + t(e, j);
          if (!next[s + j] || *next[s + j] < v) next[s + j] = v;
        }
      }
      best = std::move(next);
    }
    if (!best[k]) throw consistency_error("no split of k over the binary digits of n");
    return *best[k];
  }

 private:
  using Key = std::pair<unsigned, unsigned>;

  std::optional<long long> lookup(const std::map<Key, long long>& m, Key key) {
    std::lock_guard lock(mu_);
    auto it = m.find(key);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }
  void store(std::map<Key, long long>& m, Key key, long long v) {
    std::lock_guard lock(mu_);
    m.emplace(key, v);
  }

  std::mutex mu_;
  std::map<Key, long long> t_cache_;
  std::map<Key, long long> delta_cache_;
};

inline ThresholdTable& thresholds() {
  static ThresholdTable table;
  return table;
}

inline long long t_threshold(unsigned e, unsigned k) { return thresholds().t(e, k); }
inline int delta(unsigned e, unsigned w) { return thresholds().delta(e, w); }
inline long long T_threshold(int n, unsigned k) { return thresholds().T(n, k); }

/// How h_membership decides.
enum class Path { formula, oracle, both };

/// Whether chi^lambda|P_n has a constituent of degree 2^k. The formula path
/// tests lambda against the T_n^k box; the oracle path inspects the
/// decomposition; `both` throws consistency_error when they disagree.
inline bool h_membership(const Partition& lambda, int n, unsigned k, Path path = Path::formula) {
  if (!lambda.is_hook() || lambda.weight() != n) throw input_error(lambda.str() + " is not a hook of " + std::to_string(n));
  if (k > alpha(n)) throw input_error("k exceeds alpha(n)");
  const auto h = HookPartition::from_partition(lambda);
  std::optional<bool> formula, oracle;
  if (path != Path::oracle) formula = in_box(h, static_cast<int>(T_threshold(n, k)));
  if (path != Path::formula) oracle = degree_profile(restrict_oracle(h)).distinct_at(k) > 0;
  if (formula && oracle && *formula != *oracle)
    throw consistency_error("membership of " + lambda.str() + " in H_" + std::to_string(n) + "^" +
                            std::to_string(k) + " differs between formula and oracle");
  return formula ? *formula : *oracle;
}

/// H_n^k as a sorted list of hooks.
inline std::vector<HookPartition> h_set(int n, unsigned k, Path path = Path::formula) {
  std::vector<HookPartition> out;
  for (const auto& h : all_hooks(n))
    if (h_membership(h.to_partition(), n, k, path)) out.push_back(h);
  return out;
}

/// H_n^k is contained in H_n^l for l <= k.
inline bool inclusion_check(int n, unsigned k, unsigned l, Path path = Path::formula) {
  if (l > k || k > alpha(n)) throw input_error("inclusion_check needs l <= k <= alpha(n)");
  for (const auto& h : all_hooks(n)) {
    const Partition p = h.to_partition();
    if (h_membership(p, n, k, path) && !h_membership(p, n, l, path)) return false;
  }
  return true;
}

/// For k > 1 every hook in the (T_n^k - 1) box has at least three distinct
/// constituents of degree 2^k. nullopt when n is beyond the oracle cap.
inline std::optional<bool> three_constituent_check(int n, unsigned k) {
  if (k <= 1 || k > alpha(n)) throw input_error("three_constituent_check needs 1 < k <= alpha(n)");
  if (!within_oracle_cap(n)) return std::nullopt;
  const long long t = T_threshold(n, k) - 1;
  if (t < 1) return true;
  const auto hooks = hooks_in_box(n, static_cast<int>(t));
  for (const auto& d : restrict_oracle_many(n, hooks))
    if (degree_profile(d).distinct_at(k) < 3) return false;
  return true;
}

/// T_n^{alpha_n} from the recursion equals the sum of tau over the binary
/// digits of n. nullopt when the recursion needs the oracle beyond the cap.
inline std::optional<bool> max_threshold_check(int n) {
  long long expected = 0;
  for (unsigned e : binary_expansion(n).exponents) expected += e == 0 ? 1 : tau(e);
  try {
    return T_threshold(n, alpha(n)) == expected;
  } catch (const oracle_horizon&) {
    return std::nullopt;
  }
}

}  // namespace sbc
