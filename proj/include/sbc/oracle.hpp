#pragma once

// Brute-force Sylow restriction: [chi^h|P_n, theta] as an exact class-function
// inner product over P_n = P_{2^{k_1}} x ... x P_{2^{k_t}}.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sbc/core.hpp"
#include "sbc/partitions.hpp"
#include "sbc/sym_chars.hpp"
#include "sbc/wreath.hpp"

namespace sbc {

/// An irreducible character of P_n: one label per binary digit of n, in
/// decreasing exponent order.
struct ProductIrrLabel {
  std::vector<IrrLabel> factors;

  std::uint64_t degree() const {
    std::uint64_t d = 1;
    for (const auto& f : factors) d *= sbc::degree(f);
    return d;
  }
  std::optional<std::vector<LinearLabel>> linear() const {
    std::vector<LinearLabel> out;
    for (const auto& f : factors) {
      auto l = to_linear(f);
      if (!l) return std::nullopt;
      out.push_back(std::move(*l));
    }
    return out;
  }
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x " : "") + render(factors[i]);
    return out;
  }

  /// Output order: by degree, then label order.
  friend bool operator<(const ProductIrrLabel& a, const ProductIrrLabel& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.factors < b.factors;
  }
  friend bool operator==(const ProductIrrLabel&, const ProductIrrLabel&) = default;
};

inline ProductIrrLabel to_product_label(const std::vector<LinearLabel>& lin) {
  ProductIrrLabel out;
  for (const auto& l : lin) out.factors.push_back(to_irr_label(l));
  return out;
}

/// P_n as a product of wreath levels; classes and labels are flat indices
/// in mixed radix, first factor most significant.
class SylowGroup {
 public:
  explicit SylowGroup(int n) : n_(n), expansion_(binary_expansion(n)) {
    for (unsigned e : expansion_.exponents) factors_.push_back(&wreath_level(e));
    class_count_ = label_count_ = 1;
    order_ = 1;
    for (const auto* f : factors_) {
      class_count_ *= f->class_count();
      label_count_ *= f->label_count();
      order_ *= f->order();
    }
    if (class_count_ > kMaxClassesPerLevel)
      throw resource_limit("P_" + std::to_string(n) + " has too many classes for the oracle");
  }

  int n() const { return n_; }
  const BinaryExpansion& expansion() const { return expansion_; }
  const std::vector<const WreathLevel*>& factors() const { return factors_; }
  std::size_t class_count() const { return class_count_; }
  std::size_t label_count() const { return label_count_; }
  const Integer& order() const { return order_; }

  std::vector<std::uint32_t> split(std::size_t flat, bool labels) const {
    std::vector<std::uint32_t> idx(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const std::size_t radix = labels ? factors_[i]->label_count() : factors_[i]->class_count();
      idx[i] = static_cast<std::uint32_t>(flat % radix);
      flat /= radix;
    }
    return idx;
  }

  ProductIrrLabel label(std::size_t flat) const {
    ProductIrrLabel out;
    const auto idx = split(flat, true);
    for (std::size_t i = 0; i < factors_.size(); ++i) out.factors.push_back({expansion_.exponents[i], idx[i]});
    return out;
  }

  std::size_t label_index(const ProductIrrLabel& l) const {
    if (l.factors.size() != factors_.size()) throw input_error("label has the wrong number of factors");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (l.factors[i].level != expansion_.exponents[i]) throw input_error("label factor on the wrong level");
      flat = flat * factors_[i]->label_count() + l.factors[i].index;
    }
    return flat;
  }

  CycleType cycle_type(std::size_t flat_class) const {
    const auto idx = split(flat_class, false);
    std::vector<int> cycles;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto& parts = factors_[i]->cls(idx[i]).cycle_type.parts();
      cycles.insert(cycles.end(), parts.begin(), parts.end());
    }
    return make_cycle_type(std::move(cycles));
  }

  std::uint64_t class_size(std::size_t flat_class) const {
    const auto idx = split(flat_class, false);
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) s *= factors_[i]->cls(idx[i]).size;
    return s;
  }

 private:
  int n_;
  BinaryExpansion expansion_;
  std::vector<const WreathLevel*> factors_;
  std::size_t class_count_ = 1;
  std::size_t label_count_ = 1;
  Integer order_;
};

/// chi^h restricted to P_n, as irreducible constituents with multiplicities.
struct BranchingDecomposition {
  int n = 0;
  HookPartition hook;
  std::map<ProductIrrLabel, Integer> constituents;

  Integer multiplicity(const ProductIrrLabel& l) const {
    auto it = constituents.find(l);
    return it == constituents.end() ? Integer(0) : it->second;
  }
};

/// Per degree exponent j: number of distinct constituents of degree 2^j and
/// their total multiplicity.
struct DegreeProfile {
  std::map<unsigned, std::size_t> distinct;
  std::map<unsigned, Integer> total;

  std::size_t distinct_at(unsigned j) const {
    auto it = distinct.find(j);
    return it == distinct.end() ? 0 : it->second;
  }
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

inline DegreeProfile degree_profile(const BranchingDecomposition& d) {
  DegreeProfile p;
  for (const auto& [label, mult] : d.constituents) {
    const unsigned j = exponent_of(static_cast<long long>(label.degree()));
    ++p.distinct[j];
    p.total[j] += mult;
  }
  return p;
}

/// Decomposes chi^h|P_n for every hook in `hooks` (all of weight n) in one
/// pass over the character table of P_n:
///   [chi^h|P, theta] = (1/|P|) sum_classes |C| chi^h(C) theta(C).
/// Accumulation uses 128-bit integers after checking |P| max|chi| max deg
/// stays below 2^120; every division by |P| must be exact.
inline std::vector<BranchingDecomposition> restrict_oracle_batch(int n, const std::vector<HookPartition>& hooks) {
  for (const auto& h : hooks)
    if (h.n != n) throw input_error("restrict_oracle_batch: hook weight differs from n");
  const SylowGroup group(n);
  const std::size_t nc = group.class_count();
  const std::size_t nh = hooks.size();
  const std::size_t nf = group.factors().size();

  // Distinct cycle types of the classes.
  std::map<CycleType, std::uint32_t> type_ids;
  std::vector<std::uint32_t> class_type(nc);
  std::vector<std::vector<std::uint32_t>> class_parts(nf, std::vector<std::uint32_t>(nc));
  for (std::size_t c = 0; c < nc; ++c) {
    const auto idx = group.split(c, false);
    for (std::size_t i = 0; i < nf; ++i) class_parts[i][c] = idx[i];
    auto [it, fresh] = type_ids.emplace(group.cycle_type(c), static_cast<std::uint32_t>(type_ids.size()));
    class_type[c] = it->second;
  }

  std::uint64_t max_degree = 1;
  for (const auto* f : group.factors()) max_degree *= f->max_degree();

  // weighted[c * nh + h] = |C| * chi^h(C).
  std::vector<__int128> weighted(nc * nh);
  MnEvaluator mn;
  const Integer limit = Integer(1) << 120;
  for (std::size_t hi = 0; hi < nh; ++hi) {
    const Partition lambda = hooks[hi].to_partition();
    std::vector<long long> chi(type_ids.size());
    Integer max_abs = 0;
    for (const auto& [ct, id] : type_ids) {
      const Integer v = mn.value(lambda, ct);
      const Integer a = abs(v);
      if (a > max_abs) max_abs = a;
      if (a > Integer(1) << 62) throw resource_limit("character value too large for the oracle");
      chi[id] = static_cast<long long>(v);
    }
    if (group.order() * max_abs * max_degree >= limit)
      throw resource_limit("oracle accumulator bound exceeded for n = " + std::to_string(n));
    for (std::size_t c = 0; c < nc; ++c)
      weighted[c * nh + hi] = static_cast<__int128>(group.class_size(c)) * chi[class_type[c]];
  }

  std::vector<BranchingDecomposition> out(nh);
  for (std::size_t hi = 0; hi < nh; ++hi) {
    out[hi].n = n;
    out[hi].hook = hooks[hi];
  }
  if (group.order() >= limit) throw resource_limit("group order too large");
  const __int128 order = static_cast<__int128>(static_cast<unsigned long long>(group.order() >> 64)) << 64 |
                         static_cast<unsigned long long>(group.order() & Integer(~0ULL));

  std::vector<std::vector<long long>> rows(nf);
  for (std::size_t i = 0; i < nf; ++i) rows[i].resize(group.factors()[i]->class_count());
  std::vector<__int128> acc(nh);
  std::vector<std::uint32_t> lidx(nf, 0);
  for (std::size_t l = 0; l < group.label_count(); ++l) {
    // Mixed-radix increment of the label tuple; rows are refreshed only for
    // factors whose index changed.
    if (l == 0) {
      for (std::size_t i = 0; i < nf; ++i)
        for (std::size_t c = 0; c < rows[i].size(); ++c) rows[i][c] = group.factors()[i]->value(0, c);
    } else {
      for (std::size_t i = nf; i-- > 0;) {
        const auto* f = group.factors()[i];
        lidx[i] = static_cast<std::uint32_t>((lidx[i] + 1) % f->label_count());
        for (std::size_t c = 0; c < rows[i].size(); ++c) rows[i][c] = f->value(lidx[i], c);
        if (lidx[i] != 0) break;
      }
    }
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t c = 0; c < nc; ++c) {
      long long theta = 1;
      for (std::size_t i = 0; i < nf && theta != 0; ++i) theta *= rows[i][class_parts[i][c]];
      if (theta == 0) continue;
      const __int128* w = &weighted[c * nh];
      for (std::size_t hi = 0; hi < nh; ++hi) acc[hi] += w[hi] * theta;
    }
    for (std::size_t hi = 0; hi < nh; ++hi) {
      if (acc[hi] == 0) continue;
      if (acc[hi] % order != 0 || acc[hi] < 0)
        throw consistency_error("inner product for " + hooks[hi].str() + " and " + group.label(l).str() +
                                " is not a non-negative multiple of |P_n|");
      const __int128 m = acc[hi] / order;
      out[hi].constituents.emplace(group.label(l), Integer(static_cast<long long>(m)));
    }
  }

  for (auto& d : out) {
    Integer total = 0;
    for (const auto& [label, mult] : d.constituents) total += mult * label.degree();
    if (total != hook_degree(d.hook))
      throw consistency_error("decomposition of " + d.hook.str() + " does not preserve the degree");
  }
  return out;
}

namespace detail {

class OracleCache {
 public:
  std::shared_ptr<const BranchingDecomposition> find(const HookPartition& h) {
    std::lock_guard lock(mu_);
    auto it = cache_.find(h);
    return it == cache_.end() ? nullptr : it->second;
  }
  void put(const BranchingDecomposition& d) {
    std::lock_guard lock(mu_);
    cache_.emplace(d.hook, std::make_shared<const BranchingDecomposition>(d));
  }

 private:
  std::mutex mu_;
  std::map<HookPartition, std::shared_ptr<const BranchingDecomposition>> cache_;
};

inline OracleCache& oracle_cache() {
  static OracleCache cache;
  return cache;
}

}  // namespace detail

/// Decompositions for `hooks` (all of weight n), memoized process-wide.
inline std::vector<BranchingDecomposition> restrict_oracle_many(int n, const std::vector<HookPartition>& hooks) {
  auto& cache = detail::oracle_cache();
  std::vector<HookPartition> missing;
  for (const auto& h : hooks)
    if (!cache.find(h)) missing.push_back(h);
  if (!missing.empty())
    for (const auto& d : restrict_oracle_batch(n, missing)) cache.put(d);
  std::vector<BranchingDecomposition> out;
  for (const auto& h : hooks) out.push_back(*cache.find(h));
  return out;
}

inline BranchingDecomposition restrict_oracle(const HookPartition& h) { return restrict_oracle_many(h.n, {h}).front(); }

/// Decompositions for every hook of n, indexed by leg length.
inline std::vector<BranchingDecomposition> restrict_oracle_all(int n) { return restrict_oracle_many(n, all_hooks(n)); }

/// Whether n is small enough for the oracle under the current level cap.
inline bool within_oracle_cap(int n) {
  if (n < 1) return false;
  for (unsigned e : binary_expansion(n).exponents)
    if (e > level_cap()) return false;
  return n <= (1 << level_cap());
}

}  // namespace sbc
