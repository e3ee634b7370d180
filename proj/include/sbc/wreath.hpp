#pragma once

// Sylow 2-subgroups of symmetric groups as iterated wreath products
// P_{2^k} = P_{2^{k-1}} wr C_2: irreducible-character labels, conjugacy
// classes with their cycle types in S_{2^k}, and exact character values.
//
// Every level is interned: labels and classes are indices into per-level
// tables built once. Level k stores
//   labels:  Ext(s, b) for every level-(k-1) label s and bit b, then
//            Ind(a, b) for every pair a < b of level-(k-1) labels;
//   classes: Base{a, b} for every pair a <= b of level-(k-1) classes, then
//            Outer{c} for every level-(k-1) class c.
// Index order is the canonical label/class order (Ext < Ind, then
// lexicographic in the sub-indices).

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sbc/core.hpp"
#include "sbc/partitions.hpp"
#include "sbc/sym_chars.hpp"

namespace sbc {

enum class LabelKind : std::uint8_t { trivial, ext, ind };
enum class ClassKind : std::uint8_t { identity, base, outer };

struct LabelNode {
  LabelKind kind = LabelKind::trivial;
  std::uint32_t a = 0;  // Ext: sub label; Ind: smaller sub label
  std::uint32_t b = 0;  // Ext: bit;       Ind: larger sub label
};

/// A conjugacy class of P_{2^k} with its recursive descriptor.
struct ConjClassData {
  ClassKind kind = ClassKind::identity;
  std::uint32_t a = 0;  // Base: smaller sub class; Outer: sub class
  std::uint32_t b = 0;  // Base: larger sub class
  std::uint64_t size = 1;
  CycleType cycle_type;
};

/// Levels above this store no value matrix; values are computed from the
/// level below on demand.
inline constexpr unsigned kMaterializedLevels = 4;
inline constexpr std::size_t kMaxClassesPerLevel = 2'000'000;
inline constexpr unsigned kMaxLevel = 8;

class WreathLevel {
 public:
  unsigned k() const { return k_; }
  const WreathLevel* sub() const { return sub_; }
  std::size_t label_count() const { return labels_.size(); }
  std::size_t class_count() const { return classes_.size(); }
  const std::vector<LabelNode>& labels() const { return labels_; }
  const std::vector<ConjClassData>& classes() const { return classes_; }
  const LabelNode& label(std::size_t i) const { return labels_[i]; }
  const ConjClassData& cls(std::size_t i) const { return classes_[i]; }
  std::uint64_t degree(std::size_t label) const { return degrees_[label]; }
  std::uint64_t max_degree() const { return max_degree_; }
  /// |P_{2^k}| = 2^{2^k - 1}.
  std::uint64_t order() const { return order_; }
  bool materialized() const { return !table_.empty(); }

  /// theta_label(class).
  long long value(std::size_t label, std::size_t cls) const {
    if (!table_.empty()) return table_[label * classes_.size() + cls];
    return compute_value(label, cls);
  }

  std::size_t ext_index(std::size_t sub_label, unsigned bit) const { return 2 * sub_label + bit; }
  std::size_t ind_index(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    const std::size_t m = sub_->label_count();
    return 2 * m + a * m - a * (a + 1) / 2 + (b - a - 1);
  }
  std::size_t base_index(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    const std::size_t m = sub_->class_count();
    // Pairs (i, j), i <= j, with i < a number a*m - a*(a-1)/2.
    return a * m - a * (a - 1) / 2 + (b - a);
  }
  std::size_t outer_index(std::size_t c) const {
    const std::size_t m = sub_->class_count();
    return m * (m + 1) / 2 + c;
  }

  static std::unique_ptr<WreathLevel> build(unsigned k, const WreathLevel* sub);

 private:
  long long compute_value(std::size_t label, std::size_t cls) const {
    const LabelNode& l = labels_[label];
    const ConjClassData& c = classes_[cls];
    if (l.kind == LabelKind::trivial) return 1;
    if (c.kind == ClassKind::base) {
      if (l.kind == LabelKind::ext) return sub_->value(l.a, c.a) * sub_->value(l.a, c.b);
      return sub_->value(l.a, c.a) * sub_->value(l.b, c.b) + sub_->value(l.a, c.b) * sub_->value(l.b, c.a);
    }
    if (l.kind == LabelKind::ind) return 0;
    const long long v = sub_->value(l.a, c.a);
    return l.b == 0 ? v : -v;
  }

  unsigned k_ = 0;
  const WreathLevel* sub_ = nullptr;
  std::vector<LabelNode> labels_;
  std::vector<ConjClassData> classes_;
  std::vector<std::uint64_t> degrees_;
  std::uint64_t max_degree_ = 1;
  std::uint64_t order_ = 1;
  std::vector<std::int32_t> table_;
};

inline std::unique_ptr<WreathLevel> WreathLevel::build(unsigned k, const WreathLevel* sub) {
  auto lvl = std::make_unique<WreathLevel>();
  lvl->k_ = k;
  lvl->sub_ = sub;
  if (k == 0) {
    lvl->labels_.push_back({LabelKind::trivial, 0, 0});
    lvl->degrees_.push_back(1);
    lvl->classes_.push_back({ClassKind::identity, 0, 0, 1, CycleType{1}});
    lvl->table_.push_back(1);
    return lvl;
  }

  const std::size_t ml = sub->label_count();
  const std::size_t mc = sub->class_count();
  const std::size_t n_classes = mc * (mc + 1) / 2 + mc;
  if (n_classes > kMaxClassesPerLevel)
    throw resource_limit("P_{2^" + std::to_string(k) + "} has " + std::to_string(n_classes) +
                         " classes, above the per-level limit");

  lvl->labels_.reserve(2 * ml + ml * (ml - 1) / 2);
  for (std::size_t s = 0; s < ml; ++s)
    for (std::uint32_t bit = 0; bit < 2; ++bit) {
      lvl->labels_.push_back({LabelKind::ext, static_cast<std::uint32_t>(s), bit});
      lvl->degrees_.push_back(sub->degree(s) * sub->degree(s));
    }
  for (std::size_t a = 0; a < ml; ++a)
    for (std::size_t b = a + 1; b < ml; ++b) {
      lvl->labels_.push_back({LabelKind::ind, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
      lvl->degrees_.push_back(2 * sub->degree(a) * sub->degree(b));
    }
  for (auto d : lvl->degrees_) lvl->max_degree_ = std::max(lvl->max_degree_, d);

  const std::uint64_t sub_order = sub->order();
  lvl->order_ = 2 * sub_order * sub_order;

  lvl->classes_.reserve(n_classes);
  for (std::size_t a = 0; a < mc; ++a)
    for (std::size_t b = a; b < mc; ++b) {
      const auto& ca = sub->cls(a);
      const auto& cb = sub->cls(b);
      std::vector<int> cycles = ca.cycle_type.parts();
      cycles.insert(cycles.end(), cb.cycle_type.parts().begin(), cb.cycle_type.parts().end());
      const std::uint64_t size = a == b ? ca.size * ca.size : 2 * ca.size * cb.size;
      lvl->classes_.push_back({ClassKind::base, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), size,
                               make_cycle_type(std::move(cycles))});
    }
  for (std::size_t c = 0; c < mc; ++c) {
    const auto& cc = sub->cls(c);
    std::vector<int> cycles;
    for (int len : cc.cycle_type.parts()) cycles.push_back(2 * len);
    lvl->classes_.push_back(
        {ClassKind::outer, static_cast<std::uint32_t>(c), 0, sub_order * cc.size, make_cycle_type(std::move(cycles))});
  }

  std::uint64_t total = 0;
  for (const auto& c : lvl->classes_) total += c.size;
  if (total != lvl->order_)
    throw consistency_error("class sizes of P_{2^" + std::to_string(k) + "} do not sum to the group order");

  if (k <= kMaterializedLevels) {
    const std::size_t nl = lvl->labels_.size();
    std::vector<std::int32_t> table(nl * n_classes);
    for (std::size_t l = 0; l < nl; ++l)
      for (std::size_t c = 0; c < n_classes; ++c)
        table[l * n_classes + c] = static_cast<std::int32_t>(lvl->compute_value(l, c));
    lvl->table_ = std::move(table);
  }
  return lvl;
}

/// The interned level k, built once per process. Concurrent callers for
/// the same level block until the single build finishes.
inline const WreathLevel& wreath_level(unsigned k) {
  if (k > level_cap() || k > kMaxLevel)
    throw resource_limit("wreath level " + std::to_string(k) + " exceeds the level cap " +
                         std::to_string(level_cap()) + " (set SBC_LEVEL_CAP to raise it)");
  static std::array<std::once_flag, kMaxLevel + 1> flags;
  static std::array<std::unique_ptr<WreathLevel>, kMaxLevel + 1> levels;
  std::call_once(flags[k], [k] {
    const WreathLevel* sub = k == 0 ? nullptr : &wreath_level(k - 1);
    levels[k] = WreathLevel::build(k, sub);
  });
  return *levels[k];
}

/// Handle to an irreducible character of P_{2^level}.
struct IrrLabel {
  unsigned level = 0;
  std::uint32_t index = 0;

  const LabelNode& node() const { return wreath_level(level).label(index); }
  friend auto operator<=>(const IrrLabel&, const IrrLabel&) = default;
};

/// Handle to a conjugacy class of P_{2^level}.
struct ClassRef {
  unsigned level = 0;
  std::uint32_t index = 0;

  const ConjClassData& data() const { return wreath_level(level).cls(index); }
  friend auto operator<=>(const ClassRef&, const ClassRef&) = default;
};

/// A linear character X(i_1, ..., i_k) of P_{2^k}: the Ext chain with i_k
/// outermost.
struct LinearLabel {
  std::vector<std::uint8_t> bits;

  unsigned level() const { return static_cast<unsigned>(bits.size()); }
  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < bits.size(); ++i) out += (i ? "," : "") + std::to_string(bits[i]);
    return out + ")";
  }
  friend auto operator<=>(const LinearLabel&, const LinearLabel&) = default;
};

inline std::vector<IrrLabel> irr_labels(unsigned k) {
  const auto& lvl = wreath_level(k);
  std::vector<IrrLabel> out(lvl.label_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {k, static_cast<std::uint32_t>(i)};
  return out;
}

inline std::uint64_t degree(const IrrLabel& l) { return wreath_level(l.level).degree(l.index); }

inline const std::vector<ConjClassData>& classes(unsigned k) { return wreath_level(k).classes(); }

inline long long char_value(const IrrLabel& l, const ClassRef& c) {
  if (l.level != c.level) throw input_error("char_value: label and class live on different levels");
  return wreath_level(l.level).value(l.index, c.index);
}

inline IrrLabel to_irr_label(const LinearLabel& lin) {
  std::uint32_t idx = 0;
  for (unsigned j = 0; j < lin.bits.size(); ++j) {
    if (lin.bits[j] > 1) throw input_error("linear label bits must be 0 or 1");
    idx = static_cast<std::uint32_t>(2 * idx + lin.bits[j]);
  }
  // Ext(s, b) has index 2s + b, so the Ext chain index is the bit string read in binary.
  return {lin.level(), idx};
}

/// The bit sequence of a linear label, or nullopt for a non-linear one.
inline std::optional<LinearLabel> to_linear(const IrrLabel& l) {
  std::vector<std::uint8_t> bits(l.level);
  IrrLabel cur = l;
  for (unsigned j = l.level; j > 0; --j) {
    const LabelNode& node = cur.node();
    if (node.kind != LabelKind::ext) return std::nullopt;
    bits[j - 1] = static_cast<std::uint8_t>(node.b);
    cur = {j - 1, node.a};
  }
  return LinearLabel{std::move(bits)};
}

/// Grammar: level 0 is "1"; level 1 is X(0) or X(1); deeper labels are
/// E(sub;bit) or I(sub,sub) with the sub labels in canonical order.
inline std::string render(const IrrLabel& l) {
  const LabelNode& node = l.node();
  switch (node.kind) {
    case LabelKind::trivial:
      return "1";
    case LabelKind::ext:
      if (l.level == 1) return "X(" + std::to_string(node.b) + ")";
      return "E(" + render({l.level - 1, node.a}) + ";" + std::to_string(node.b) + ")";
    case LabelKind::ind:
      return "I(" + render({l.level - 1, node.a}) + "," + render({l.level - 1, node.b}) + ")";
  }
  return {};
}

namespace detail {

struct LabelParser {
  const std::string& s;
  std::size_t pos = 0;

  void expect(char c) {
    if (pos >= s.size() || s[pos] != c) throw input_error("bad label syntax at offset " + std::to_string(pos));
    ++pos;
  }
  unsigned bit() {
    if (pos >= s.size() || (s[pos] != '0' && s[pos] != '1'))
      throw input_error("expected bit at offset " + std::to_string(pos));
    return static_cast<unsigned>(s[pos++] - '0');
  }
  IrrLabel parse() {
    if (pos >= s.size()) throw input_error("empty label");
    const char head = s[pos++];
    if (head == '1') return {0, 0};
    if (head == 'X') {
      expect('(');
      const unsigned b = bit();
      expect(')');
      return {1, b};
    }
    if (head == 'E') {
      expect('(');
      const IrrLabel sub = parse();
      expect(';');
      const unsigned b = bit();
      expect(')');
      if (sub.level == 0) throw input_error("level-1 labels are written X(b)");
      const auto& lvl = wreath_level(sub.level + 1);
      return {sub.level + 1, static_cast<std::uint32_t>(lvl.ext_index(sub.index, b))};
    }
    if (head == 'I') {
      expect('(');
      const IrrLabel a = parse();
      expect(',');
      const IrrLabel b = parse();
      expect(')');
      if (a.level != b.level || a.index >= b.index)
        throw input_error("I(a,b) needs distinct same-level labels in canonical order");
      const auto& lvl = wreath_level(a.level + 1);
      return {a.level + 1, static_cast<std::uint32_t>(lvl.ind_index(a.index, b.index))};
    }
    throw input_error(std::string("unexpected character '") + head + "' in label");
  }
};

}  // namespace detail

inline IrrLabel parse_label(const std::string& text) {
  detail::LabelParser p{text};
  IrrLabel out = p.parse();
  if (p.pos != text.size()) throw input_error("trailing characters after label");
  return out;
}

/// Descriptor grammar: "id", "B(a,b)" and "O(c)".
inline std::string render(const ClassRef& c) {
  const ConjClassData& d = c.data();
  switch (d.kind) {
    case ClassKind::identity:
      return "id";
    case ClassKind::base:
      return "B(" + render(ClassRef{c.level - 1, d.a}) + "," + render(ClassRef{c.level - 1, d.b}) + ")";
    case ClassKind::outer:
      return "O(" + render(ClassRef{c.level - 1, d.a}) + ")";
  }
  return {};
}

/// theta * eps for a linear eps, computed structurally:
/// Ext(phi, b) * Ext(eps', e) = Ext(phi * eps', b xor e) and
/// Ind(phi1, phi2) * Ext(eps', e) = Ind(phi1 * eps', phi2 * eps').
inline IrrLabel tensor_linear(const IrrLabel& theta, const IrrLabel& eps) {
  if (theta.level != eps.level) throw input_error("tensor_linear: level mismatch");
  if (theta.level == 0) return theta;
  const LabelNode& e = eps.node();
  if (e.kind != LabelKind::ext) throw input_error("tensor_linear: second argument is not linear");
  const IrrLabel eps_sub{eps.level - 1, e.a};
  const LabelNode& t = theta.node();
  const auto& lvl = wreath_level(theta.level);
  if (t.kind == LabelKind::ext) {
    const IrrLabel s = tensor_linear({theta.level - 1, t.a}, eps_sub);
    return {theta.level, static_cast<std::uint32_t>(lvl.ext_index(s.index, t.b ^ e.b))};
  }
  const IrrLabel a = tensor_linear({theta.level - 1, t.a}, eps_sub);
  const IrrLabel b = tensor_linear({theta.level - 1, t.b}, eps_sub);
  return {theta.level, static_cast<std::uint32_t>(lvl.ind_index(a.index, b.index))};
}

/// Largest j with 2^j a character degree of P_n.
inline unsigned alpha(long long n) {
  if (n < 1) throw input_error("alpha requires n >= 1");
  unsigned total = 0;
  for (unsigned t = 0; t < 62; ++t) {
    if (!((n >> t) & 1)) continue;
    if (t <= 1)
      total += 0;
    else if (t == 2)
      total += 1;
    else
      total += (1u << (t - 2)) + (1u << (t - 3)) - 1;
  }
  return total;
}

/// Character degrees of P_n, collected from the label degrees of each
/// factor P_{2^k} and multiplied across factors.
inline std::set<Integer> char_degrees(long long n) {
  if (n < 1) throw input_error("char_degrees requires n >= 1");
  std::set<Integer> out{1};
  for (unsigned t = 0; t < 62; ++t) {
    if (!((n >> t) & 1)) continue;
    const auto& lvl = wreath_level(t);
    std::set<std::uint64_t> local;
    for (std::size_t l = 0; l < lvl.label_count(); ++l) local.insert(lvl.degree(l));
    std::set<Integer> next;
    for (const auto& d : out)
      for (auto e : local) next.insert(d * e);
    out = std::move(next);
  }
  return out;
}

/// Number of irreducible characters of P_n of the largest degree.
inline Integer top_degree_label_count(long long n) {
  if (n < 1) throw input_error("top_degree_label_count requires n >= 1");
  Integer count = 1;
  for (unsigned t = 0; t < 62; ++t) {
    if (!((n >> t) & 1)) continue;
    const auto& lvl = wreath_level(t);
    std::size_t c = 0;
    for (std::size_t l = 0; l < lvl.label_count(); ++l) c += lvl.degree(l) == lvl.max_degree();
    count *= static_cast<unsigned long long>(c);
  }
  return count;
}

/// |P_n| = product of 2^{2^{k_i} - 1} over the binary digits of n.
inline Integer sylow_order(long long n) {
  if (n < 1) throw input_error("sylow_order requires n >= 1");
  Integer out = 1;
  for (unsigned t = 0; t < 62; ++t)
    if ((n >> t) & 1) out <<= (1u << t) - 1;
  return out;
}

/// Full value matrix of one level.
struct CharTable {
  unsigned level = 0;
  std::vector<ConjClassData> classes;
  std::vector<IrrLabel> labels;
  std::vector<long long> values;  // row-major, labels x classes

  long long at(std::size_t label, std::size_t cls) const { return values[label * classes.size() + cls]; }
};

struct OrthogonalityReport {
  bool ok = true;
  bool sampled = false;
  std::size_t checked_pairs = 0;
  std::string failure;
};

/// Exact first and second orthogonality for level k, plus
/// sum of degree^2 = |P| and #labels = #classes. With `sample` set, the
/// diagonal entries are checked in full and only `sample` random
/// off-diagonal pairs of each kind are checked.
inline OrthogonalityReport check_orthogonality(unsigned k, std::optional<std::size_t> sample = std::nullopt,
                                               std::uint64_t seed = 1) {
  const auto& lvl = wreath_level(k);
  const std::size_t nl = lvl.label_count();
  const std::size_t nc = lvl.class_count();
  OrthogonalityReport rep;
  rep.sampled = sample.has_value();
  auto fail = [&](std::string msg) {
    if (rep.ok) rep.failure = std::move(msg);
    rep.ok = false;
  };
  if (nl != nc) fail("label count differs from class count");
  Integer deg2 = 0;
  for (std::size_t l = 0; l < nl; ++l) deg2 += Integer(lvl.degree(l)) * lvl.degree(l);
  if (deg2 != Integer(lvl.order())) fail("sum of squared degrees differs from the group order");

  // Values at level <= 5 are bounded by 2^11 and sizes by 2^31, so each
  // sum fits comfortably in 128 bits.
  const __int128 order = lvl.order();
  auto row_product = [&](std::size_t a, std::size_t b) {
    __int128 s = 0;
    for (std::size_t c = 0; c < nc; ++c)
      s += static_cast<__int128>(lvl.cls(c).size) * lvl.value(a, c) * lvl.value(b, c);
    return s;
  };
  auto column_product = [&](std::size_t c1, std::size_t c2) {
    __int128 s = 0;
    for (std::size_t l = 0; l < nl; ++l) s += static_cast<__int128>(lvl.value(l, c1)) * lvl.value(l, c2);
    return s;
  };
  auto check_rows = [&](std::size_t a, std::size_t b) {
    ++rep.checked_pairs;
    if (row_product(a, b) != (a == b ? order : 0))
      fail("first orthogonality fails for labels " + render(IrrLabel{k, static_cast<std::uint32_t>(a)}) + ", " +
           render(IrrLabel{k, static_cast<std::uint32_t>(b)}));
  };
  auto check_cols = [&](std::size_t c1, std::size_t c2) {
    ++rep.checked_pairs;
    // sum_theta theta(g) theta(h) = |C_P(g)| = |P| / |class| when g ~ h.
    const __int128 expect = c1 == c2 ? order / lvl.cls(c1).size : 0;
    if (c1 == c2 && order % lvl.cls(c1).size != 0) fail("class size does not divide the group order");
    if (column_product(c1, c2) != expect)
      fail("second orthogonality fails for classes " + render(ClassRef{k, static_cast<std::uint32_t>(c1)}) + ", " +
           render(ClassRef{k, static_cast<std::uint32_t>(c2)}));
  };

  if (!sample) {
    for (std::size_t a = 0; a < nl && rep.ok; ++a)
      for (std::size_t b = a; b < nl; ++b) check_rows(a, b);
    for (std::size_t a = 0; a < nc && rep.ok; ++a)
      for (std::size_t b = a; b < nc; ++b) check_cols(a, b);
    return rep;
  }
  for (std::size_t a = 0; a < nl; ++a) check_rows(a, a);
  for (std::size_t c = 0; c < nc; ++c) check_cols(c, c);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_l(0, nl - 1), pick_c(0, nc - 1);
  for (std::size_t i = 0; i < *sample; ++i) {
    std::size_t a = pick_l(rng), b = pick_l(rng);
    if (a != b) check_rows(a, b);
    std::size_t c1 = pick_c(rng), c2 = pick_c(rng);
    if (c1 != c2) check_cols(c1, c2);
  }
  return rep;
}

inline constexpr std::size_t kMaxTableEntries = 4'000'000;

/// Materialized table of level k; throws consistency_error when
/// orthogonality fails and resource_limit when the table is too large to
/// hold (use check_orthogonality with sampling there).
inline CharTable char_table(unsigned k) {
  const auto& lvl = wreath_level(k);
  if (lvl.label_count() * lvl.class_count() > kMaxTableEntries)
    throw resource_limit("character table of P_{2^" + std::to_string(k) + "} is too large to materialize");
  const auto rep = check_orthogonality(k);
  if (!rep.ok) throw consistency_error(rep.failure);
  CharTable t;
  t.level = k;
  t.classes = lvl.classes();
  t.labels = irr_labels(k);
  t.values.resize(lvl.label_count() * lvl.class_count());
  for (std::size_t l = 0; l < lvl.label_count(); ++l)
    for (std::size_t c = 0; c < lvl.class_count(); ++c) t.values[l * lvl.class_count() + c] = lvl.value(l, c);
  return t;
}

}  // namespace sbc
