#pragma once

// Closed formulas for Sylow branching coefficients of hook characters at
// the prime 2, and predicates that compare them with the oracle.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "sbc/core.hpp"
#include "sbc/lr.hpp"
#include "sbc/oracle.hpp"
#include "sbc/partitions.hpp"
#include "sbc/wreath.hpp"

namespace sbc {

/// The unique linear constituent of chi^h|P_{2^k}: bit i is the parity of
/// the adjacent binary digits a_{k-i+1} + a_{k-i} of x.
inline LinearLabel unique_linear_label(const HookPartition& h) {
  const unsigned k = exponent_of(h.n);
  const auto digits = binary_digits(h.x, k);  // a_k, ..., a_0
  LinearLabel out;
  out.bits.resize(k);
  for (unsigned i = 0; i < k; ++i) out.bits[i] = static_cast<std::uint8_t>((digits[i] + digits[i + 1]) % 2);
  return out;
}

/// The linear character phi(h_1, ..., h_t) = L_{h_1} x ... x L_{h_t} of P_n.
inline std::vector<LinearLabel> linear_character(int n, const std::vector<HookPartition>& parts) {
  const auto exp = binary_expansion(n);
  if (parts.size() != exp.size()) throw input_error("need one hook per binary digit of n");
  std::vector<LinearLabel> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].n != (1 << exp.exponents[i]))
      throw input_error("hook " + std::to_string(i) + " must have weight " + std::to_string(1 << exp.exponents[i]));
    out.push_back(unique_linear_label(parts[i]));
  }
  return out;
}

/// [chi^h|P_n, phi(h_1, ..., h_t)] = binomial(t-1, x - sum x_i).
inline Integer linear_sbc(const HookPartition& h, const std::vector<HookPartition>& parts) {
  const auto exp = binary_expansion(h.n);
  if (parts.size() != exp.size()) throw input_error("need one hook per binary digit of n");
  int legs = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].n != (1 << exp.exponents[i]))
      throw input_error("part " + std::to_string(i) + " must have weight " + std::to_string(1 << exp.exponents[i]));
    legs += parts[i].x;
  }
  return binomial(static_cast<long long>(parts.size()) - 1, h.x - legs);
}

/// Every linear constituent of chi^h|P_n with its multiplicity.
inline std::map<std::vector<LinearLabel>, Integer> linear_profile(const HookPartition& h) {
  const auto exp = binary_expansion(h.n);
  std::map<std::vector<LinearLabel>, Integer> out;
  std::vector<HookPartition> parts;
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == exp.size()) {
      Integer m = linear_sbc(h, parts);
      if (m != 0) out.emplace(linear_character(h.n, parts), m);
      return;
    }
    const int w = 1 << exp.exponents[i];
    for (int xi = 0; xi < w; ++xi) {
      parts.emplace_back(w, xi);
      self(self, i + 1);
      parts.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Number of distinct degree-2 constituents of chi^{(2^e - x, 1^x)}|P_{2^e}.
inline long long a_count(unsigned exponent, long long x) {
  if (exponent < 2 || exponent > 40) throw input_error("a_count needs exponent >= 2");
  const long long top = (1LL << exponent) - 1;
  if (x < 0 || x > top) throw input_error("a_count: x out of range");
  return std::min(x, top - x);
}

/// Degrees of the constituents of chi^{(2^k - 1, 1)}|P_{2^k}: 1, 2, ..., 2^{k-1}.
inline std::vector<std::uint64_t> hook1_degrees(unsigned k) {
  if (k < 1 || k > 62) throw input_error("hook1_degrees needs k >= 1");
  std::vector<std::uint64_t> out;
  for (unsigned j = 0; j < k; ++j) out.push_back(1ULL << j);
  return out;
}

/// Threshold of the top degree for P_{2^e}.
inline long long tau(unsigned e) {
  static constexpr long long small[] = {0, 2, 3, 7, 13, 26};
  if (e < 1 || e > 62) throw input_error("tau needs 1 <= n <= 62");
  if (e <= 5) return small[e];
  return (1LL << (e - 1)) + (1LL << (e - 2)) + (1LL << (e - 5)) + (1LL << (e - 6));
}

/// The sign character of S_n restricted to P_n, factor by factor.
inline ProductIrrLabel restricted_sign(int n) {
  ProductIrrLabel out;
  for (unsigned e : binary_expansion(n).exponents) {
    const int w = 1 << e;
    out.factors.push_back(to_irr_label(unique_linear_label(HookPartition(w, w - 1))));
  }
  return out;
}

inline ProductIrrLabel tensor_linear(const ProductIrrLabel& theta, const ProductIrrLabel& eps) {
  if (theta.factors.size() != eps.factors.size()) throw input_error("tensor_linear: factor count mismatch");
  ProductIrrLabel out;
  for (std::size_t i = 0; i < theta.factors.size(); ++i)
    out.factors.push_back(tensor_linear(theta.factors[i], eps.factors[i]));
  return out;
}

/// chi^{h'}|P = chi^h|P * sign|P, checked on the oracle decompositions.
inline bool conjugation_twist_check(const HookPartition& h) {
  const auto d = restrict_oracle(h);
  const auto dc = restrict_oracle(conjugate_hook(h));
  const auto sgn = restricted_sign(h.n);
  std::map<ProductIrrLabel, Integer> twisted;
  for (const auto& [label, mult] : d.constituents) twisted.emplace(tensor_linear(label, sgn), mult);
  return twisted == dc.constituents && degree_profile(d) == degree_profile(dc);
}

}  // namespace sbc
