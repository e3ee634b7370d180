#pragma once

// Symmetric-group character values via the Murnaghan-Nakayama rule.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "sbc/core.hpp"
#include "sbc/partitions.hpp"

namespace sbc {

/// Cycle lengths of a permutation in S_n, sorted decreasingly.
using CycleType = Partition;

inline CycleType make_cycle_type(std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return CycleType(std::move(lengths));
}

/// (-1)^{n - number of cycles}.
inline int sign(const CycleType& ct) { return (ct.weight() - ct.length()) % 2 == 0 ? 1 : -1; }

/// Murnaghan-Nakayama evaluator with a private memo table. Not thread-safe;
/// use one instance per thread (mn_value does this for you).
class MnEvaluator {
 public:
  Integer value(const Partition& lambda, const CycleType& ct) {
    if (lambda.weight() != ct.weight()) throw input_error("mn_value: weight of lambda differs from cycle type");
    return eval(lambda, ct);
  }

  std::size_t cache_size() const { return cache_.size(); }

 private:
  // Border strips of length r correspond to moving one bead of the beta-set
  // down by r into a vacant position; the leg length is the number of beads
  // jumped over.
  Integer eval(const Partition& lambda, const CycleType& ct) {
    if (ct.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, ct);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    const int r = ct.first();
    const CycleType rest(std::vector<int>(ct.parts().begin() + 1, ct.parts().end()));
    const int l = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);

    Integer total = 0;
    for (int i = 0; i < l; ++i) {
      const int from = beta[static_cast<std::size_t>(i)];
      const int to = from - r;
      if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
      int jumped = 0;
      for (int b : beta)
        if (b > to && b < from) ++jumped;
      std::vector<int> moved = beta;
      moved[static_cast<std::size_t>(i)] = to;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> parts(static_cast<std::size_t>(l));
      for (int j = 0; j < l; ++j) parts[static_cast<std::size_t>(j)] = moved[static_cast<std::size_t>(j)] - (l - 1 - j);
      const Integer sub = eval(Partition(std::move(parts)), rest);
      if (jumped % 2 == 0)
        total += sub;
      else
        total -= sub;
    }
    cache_.emplace(std::move(key), total);
    return total;
  }

  std::map<std::pair<Partition, CycleType>, Integer> cache_;
};

/// chi^lambda evaluated at a permutation of cycle type ct.
inline Integer mn_value(const Partition& lambda, const CycleType& ct) {
  thread_local MnEvaluator evaluator;
  return evaluator.value(lambda, ct);
}

/// chi^h(1) = binomial(n-1, x).
inline Integer hook_degree(const HookPartition& h) { return binomial(h.n - 1, h.x); }

}  // namespace sbc
