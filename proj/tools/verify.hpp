#pragma once

// Verification suites: every fast path of the library re-derived from the
// oracle over a range of n.

#include <functional>
#include <string>
#include <vector>

#include "sbc/sbc.hpp"

namespace sbc::verify {

struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> counterexamples;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    passed = false;
    if (counterexamples.size() < 10) counterexamples.push_back(describe());
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"orthogonality", "linear", "degrees", "boxes", "inclusion",
                                              "three",         "twist",  "tau",     "lr",    "diamond"};
  return names;
}

inline std::vector<HookPartition> parts_from_legs(int n, const std::vector<int>& legs) {
  const auto exp = binary_expansion(n);
  std::vector<HookPartition> out;
  for (std::size_t i = 0; i < legs.size(); ++i) out.emplace_back(1 << exp.exponents[i], legs[i]);
  return out;
}

/// Calls f on every tuple of leg lengths (x_1, ..., x_t) for the binary digits of n.
inline void for_each_leg_tuple(int n, const std::function<void(const std::vector<int>&)>& f) {
  const auto exp = binary_expansion(n);
  std::vector<int> legs(exp.size(), 0);
  while (true) {
    f(legs);
    std::size_t i = legs.size();
    while (i-- > 0) {
      if (++legs[i] < (1 << exp.exponents[i])) break;
      legs[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

inline SuiteResult orthogonality_suite(int max_n) {
  SuiteResult r("orthogonality");
  for (unsigned k = 0; (1 << k) <= max_n && k <= kMaterializedLevels; ++k) {
    const auto rep = check_orthogonality(k);
    r.expect(rep.ok, [&] { return "P_{2^" + std::to_string(k) + "}: " + rep.failure; });
  }
  return r;
}

inline SuiteResult linear_suite(int max_n) {
  SuiteResult r("linear");
  for (int n = 1; n <= max_n; ++n) {
    const auto decs = restrict_oracle_all(n);
    for (const auto& d : decs) {
      for_each_leg_tuple(n, [&](const std::vector<int>& legs) {
        const auto parts = parts_from_legs(n, legs);
        const Integer expect = linear_sbc(d.hook, parts);
        const Integer got = d.multiplicity(to_product_label(linear_character(n, parts)));
        r.expect(got == expect, [&] {
          return d.hook.str() + " at " + to_product_label(linear_character(n, parts)).str() + ": oracle " +
                 to_string(got) + ", formula " + to_string(expect);
        });
      });
      if (!is_power_of_two(n)) continue;
      std::vector<std::pair<ProductIrrLabel, Integer>> linear;
      for (const auto& [label, mult] : d.constituents)
        if (label.degree() == 1) linear.emplace_back(label, mult);
      const auto expect = to_product_label({unique_linear_label(d.hook)});
      r.expect(linear.size() == 1 && linear[0].second == 1 && linear[0].first == expect,
               [&] { return d.hook.str() + ": linear constituent is not unique " + expect.str(); });
    }
  }
  return r;
}

inline SuiteResult degrees_suite(int max_n) {
  SuiteResult r("degrees");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& d : restrict_oracle_all(n)) {
      Integer total = 0;
      for (const auto& [label, mult] : d.constituents) total += mult * label.degree();
      r.expect(total == hook_degree(d.hook), [&] { return d.hook.str() + ": degree not preserved"; });
    }
    if (!is_power_of_two(n) || n < 2) continue;
    const unsigned e = exponent_of(n);
    const auto d1 = restrict_oracle(HookPartition(n, 1));
    std::vector<std::uint64_t> got;
    bool mult_one = true;
    for (const auto& [label, mult] : d1.constituents) {
      got.push_back(label.degree());
      mult_one = mult_one && mult == 1;
    }
    r.expect(mult_one && got == hook1_degrees(e), [&] { return d1.hook.str() + ": not one constituent per degree"; });
    if (e < 2) continue;
    for (const auto& d : restrict_oracle_all(n)) {
      const auto count = static_cast<long long>(degree_profile(d).distinct_at(1));
      r.expect(count == a_count(e, d.hook.x), [&] {
        return d.hook.str() + ": " + std::to_string(count) + " degree-2 constituents, expected " +
               std::to_string(a_count(e, d.hook.x));
      });
    }
  }
  return r;
}

inline SuiteResult boxes_suite(int max_n) {
  SuiteResult r("boxes");
  for (int n = 1; n <= max_n; ++n) {
    const auto decs = restrict_oracle_all(n);
    for (unsigned k = 0; k <= alpha(n); ++k) {
      std::vector<HookPartition> oracle;
      for (const auto& d : decs)
        if (degree_profile(d).distinct_at(k) > 0) oracle.push_back(d.hook);
      const auto t = T_threshold(n, k);
      r.expect(oracle == hooks_in_box(n, static_cast<int>(t)), [&] {
        return "H_" + std::to_string(n) + "^" + std::to_string(k) + " differs from the box of side " + std::to_string(t);
      });
    }
  }
  return r;
}

inline SuiteResult inclusion_suite(int max_n) {
  SuiteResult r("inclusion");
  for (int n = 1; n <= max_n; ++n)
    for (unsigned k = 0; k <= alpha(n); ++k)
      for (unsigned l = 0; l <= k; ++l)
        r.expect(inclusion_check(n, k, l, Path::oracle), [&] {
          return "H_" + std::to_string(n) + "^" + std::to_string(k) + " not inside H_" + std::to_string(n) + "^" +
                 std::to_string(l);
        });
  return r;
}

inline SuiteResult three_suite(int max_n) {
  SuiteResult r("three");
  for (int n = 1; n <= max_n; ++n)
    for (unsigned k = 2; k <= alpha(n); ++k) {
      const auto ok = three_constituent_check(n, k);
      r.expect(ok.value_or(false), [&] {
        return "n=" + std::to_string(n) + ", k=" + std::to_string(k) + (ok ? ": fewer than three" : ": skipped");
      });
    }
  return r;
}

inline SuiteResult twist_suite(int max_n) {
  SuiteResult r("twist");
  for (int n = 1; n <= max_n; ++n)
    for (const auto& h : all_hooks(n))
      r.expect(conjugation_twist_check(h), [&] { return h.str() + ": sign twist mismatch"; });
  return r;
}

inline SuiteResult tau_suite(int max_n) {
  SuiteResult r("tau");
  for (int n = 1; n <= max_n; ++n) {
    const auto ok = max_threshold_check(n);
    if (ok) r.expect(*ok, [&] { return "T_" + std::to_string(n) + " at alpha differs from the tau sum"; });
  }
  for (unsigned e = 7; e <= 20; ++e)
    r.expect(tau(e) == 2 * tau(e - 1), [&] { return "tau_" + std::to_string(e) + " is not twice tau_" + std::to_string(e - 1); });
  return r;
}

/// lr_hook against the general LR fold for every multiset of hooks of total
/// weight <= max_w with at least two members. LR coefficients do not depend
/// on the order of the inner shapes, so hooks are added in a fixed order and
/// the fold is extended one hook at a time; every hook of the running weight
/// is then compared.
inline SuiteResult lr_suite(int max_w) {
  SuiteResult r("lr");
  const int w = std::max(max_w, 1);
  const Partition bound = HookPartition(2 * w - 1, w - 1).to_partition();
  std::vector<HookPartition> hooks;
  auto rec = [&](auto& self, const std::map<Partition, Integer>& acc, int weight, HookPartition last) -> void {
    if (hooks.size() >= 2)
      for (const auto& h : all_hooks(weight)) {
        auto it = acc.find(h.to_partition());
        const Integer slow = it == acc.end() ? Integer(0) : it->second;
        const Integer fast = lr_hook(h, hooks);
        r.expect(fast == slow, [&] {
          std::string s = h.str() + " from";
          for (const auto& hh : hooks) s += " " + hh.str();
          return s + ": " + to_string(fast) + " vs " + to_string(slow);
        });
      }
    for (int w = last.n; weight + w <= max_w; ++w)
      for (int x = w == last.n ? last.x : 0; x < w; ++x) {
        const HookPartition next(w, x);
        hooks.push_back(next);
        self(self, lr_fold_step(acc, next.to_partition(), bound), weight + w, next);
        hooks.pop_back();
      }
  };
  rec(rec, {{Partition{}, Integer(1)}}, 0, HookPartition(1, 0));
  return r;
}

/// lr_multi itself on every ordered hook tuple of total weight <= max_w.
inline SuiteResult lr_multi_suite(int max_w) {
  SuiteResult r("lr_multi");
  std::vector<HookPartition> hooks;
  auto rec = [&](auto& self, int weight) -> void {
    if (hooks.size() >= 2) {
      std::vector<Partition> inners;
      for (const auto& hh : hooks) inners.push_back(hh.to_partition());
      for (const auto& h : all_hooks(weight)) {
        const Integer fast = lr_hook(h, hooks);
        const Integer slow = lr_multi(h.to_partition(), inners);
        r.expect(fast == slow, [&] { return h.str() + ": " + to_string(fast) + " vs " + to_string(slow); });
      }
    }
    for (int w = 1; weight + w <= max_w; ++w)
      for (int x = 0; x < w; ++x) {
        hooks.emplace_back(w, x);
        self(self, weight + w);
        hooks.pop_back();
      }
  };
  rec(rec, 0);
  return r;
}

/// H_{2^{e-1}}^i <> H_{2^{e-1}}^j inside H_{2^e}^{i+j+1} for i != j.
inline SuiteResult diamond_suite(int max_n) {
  SuiteResult r("diamond");
  for (unsigned e = 3; (1 << e) <= max_n && e <= 4; ++e) {
    const int half = 1 << (e - 1);
    const unsigned a = alpha(half);
    for (unsigned i = 0; i <= a; ++i)
      for (unsigned j = 0; j <= a; ++j) {
        if (i == j || i + j + 1 > alpha(1 << e)) continue;
        const auto lhs = diamond(hook_box_set(half, static_cast<int>(t_threshold(e - 1, i))),
                                 hook_box_set(half, static_cast<int>(t_threshold(e - 1, j))));
        const auto rhs = hook_box_set(1 << e, static_cast<int>(t_threshold(e, i + j + 1)));
        bool inside = true;
        for (const auto& p : lhs.members) inside = inside && rhs.contains(p);
        r.expect(inside, [&] {
          return "e=" + std::to_string(e) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
        });
      }
  }
  return r;
}

inline SuiteResult run_suite(const std::string& name, int max_n) {
  if (name == "orthogonality") return orthogonality_suite(max_n);
  if (name == "linear") return linear_suite(max_n);
  if (name == "degrees") return degrees_suite(max_n);
  if (name == "boxes") return boxes_suite(max_n);
  if (name == "inclusion") return inclusion_suite(max_n);
  if (name == "three") return three_suite(max_n);
  if (name == "twist") return twist_suite(max_n);
  if (name == "tau") return tau_suite(max_n);
  if (name == "lr") return lr_suite(max_n);
  if (name == "diamond") return diamond_suite(max_n);
  throw input_error("unknown suite '" + name + "'");
}

}  // namespace sbc::verify
