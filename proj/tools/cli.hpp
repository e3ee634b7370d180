#pragma once

// Commands of the sbc tool. Each returns an OutputRecord; rendering and
// exit codes live in sbc.cpp.

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sbc/sbc.hpp"
#include "verify.hpp"

namespace sbc::cli {

using Json = nlohmann::ordered_json;

enum class Mode { formula, oracle, both };

inline Mode parse_mode(const std::string& s) {
  if (s == "formula") return Mode::formula;
  if (s == "oracle") return Mode::oracle;
  if (s == "both") return Mode::both;
  throw input_error("unknown mode '" + s + "'");
}

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::formula: return "formula";
    case Mode::oracle: return "oracle";
    case Mode::both: return "both";
  }
  return "";
}

inline const char* provenance(Mode m) {
  switch (m) {
    case Mode::formula: return "formula";
    case Mode::oracle: return "oracle";
    case Mode::both: return "both-agree";
  }
  return "";
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct OutputRecord {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::string provenance;
  double millis = 0;
  Table table;
  int exit_code = 0;

  Json to_json(bool with_timing = true) const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["provenance"] = provenance;
    if (with_timing) j["timing"] = {{"ms", millis}};
    return j;
  }
};

inline Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline std::string join_labels(const std::vector<LinearLabel>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? " x " : "") + labels[i].str();
  return out;
}

inline HookPartition make_hook(int n, int x) {
  if (n < 1) throw input_error("--n must be at least 1");
  if (x < 0 || x >= n) throw input_error("--x must lie in [0, n-1]");
  return HookPartition(n, x);
}

inline void require_oracle(int n) {
  if (!within_oracle_cap(n))
    throw resource_limit("n = " + std::to_string(n) + " is beyond the oracle cap 2^" + std::to_string(level_cap()));
}

template <class F>
OutputRecord timed(F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  OutputRecord rec = body();
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

/// Linear constituents of chi^h|P_n among the oracle constituents.
inline std::map<std::vector<LinearLabel>, Integer> oracle_linear(const BranchingDecomposition& d) {
  std::map<std::vector<LinearLabel>, Integer> out;
  for (const auto& [label, mult] : d.constituents)
    if (auto lin = label.linear()) out.emplace(*lin, mult);
  return out;
}

inline OutputRecord cmd_linear(int n, int x, Mode mode = Mode::formula) {
  return timed([&] {
    const auto h = make_hook(n, x);
    OutputRecord rec;
    rec.command = "linear";
    rec.inputs = {{"n", n}, {"x", x}, {"mode", mode_name(mode)}};
    rec.provenance = provenance(mode);

    std::map<std::vector<LinearLabel>, Integer> profile;
    if (mode != Mode::oracle) profile = linear_profile(h);
    if (mode != Mode::formula) {
      require_oracle(n);
      auto oracle = oracle_linear(restrict_oracle(h));
      if (mode == Mode::both && oracle != profile)
        throw consistency_error("linear constituents of " + h.str() + " differ between formula and oracle");
      profile = std::move(oracle);
    }

    if (is_power_of_two(n)) {
      if (profile.size() != 1) throw consistency_error("expected a unique linear constituent for " + h.str());
      const auto& bits = profile.begin()->first.front();
      rec.result = {{"hook", h.str()}, {"bits", bits.str()}, {"label", render(to_irr_label(bits))}};
      rec.table = {{"hook", "bits", "label"}, {{h.str(), bits.str(), render(to_irr_label(bits))}}};
      return rec;
    }
    Json rows = Json::array();
    rec.table.header = {"label", "multiplicity"};
    for (const auto& [labels, mult] : profile) {
      rows.push_back({{"label", join_labels(labels)}, {"multiplicity", to_json(mult)}});
      rec.table.rows.push_back({join_labels(labels), to_string(mult)});
    }
    rec.result = {{"hook", h.str()}, {"profile", rows}};
    return rec;
  });
}

inline OutputRecord cmd_coeff(int n, int x, const std::vector<int>& legs, Mode mode = Mode::formula) {
  return timed([&] {
    const auto h = make_hook(n, x);
    const auto exp = binary_expansion(n);
    if (legs.size() != exp.size())
      throw input_error("--parts needs " + std::to_string(exp.size()) + " leg lengths, one per binary digit of n");
    std::vector<HookPartition> parts;
    for (std::size_t i = 0; i < legs.size(); ++i) parts.push_back(make_hook(1 << exp.exponents[i], legs[i]));
    const auto label = linear_character(n, parts);

    OutputRecord rec;
    rec.command = "coeff";
    Json legs_json = legs;
    rec.inputs = {{"n", n}, {"x", x}, {"parts", legs_json}, {"mode", mode_name(mode)}};
    rec.provenance = provenance(mode);
    std::optional<Integer> formula, oracle;
    if (mode != Mode::oracle) formula = linear_sbc(h, parts);
    if (mode != Mode::formula) {
      require_oracle(n);
      oracle = restrict_oracle(h).multiplicity(to_product_label(label));
    }
    if (formula && oracle && *formula != *oracle)
      throw consistency_error("coefficient differs between formula and oracle");
    const Integer value = formula ? *formula : *oracle;
    int legs_sum = 0;
    for (int l : legs) legs_sum += l;
    rec.result = {{"hook", h.str()},
                  {"label", join_labels(label)},
                  {"t", exp.size()},
                  {"y", x - legs_sum},
                  {"multiplicity", to_json(value)}};
    rec.table = {{"hook", "label", "multiplicity"}, {{h.str(), join_labels(label), to_string(value)}}};
    return rec;
  });
}

inline OutputRecord cmd_restrict(int n, int x, bool profile_only, Mode mode = Mode::oracle) {
  return timed([&] {
    const auto h = make_hook(n, x);
    OutputRecord rec;
    rec.command = "restrict";
    rec.inputs = {{"n", n}, {"x", x}, {"profile", profile_only}, {"mode", mode_name(mode)}};
    rec.provenance = provenance(mode);

    if (mode == Mode::formula) {
      // Closed forms only give the linear part and, for 2-powers, the
      // number of distinct degree-2 constituents.
      Json rows = Json::array();
      rec.table.header = {"label", "multiplicity"};
      for (const auto& [labels, mult] : linear_profile(h)) {
        rows.push_back({{"label", join_labels(labels)}, {"multiplicity", to_json(mult)}});
        rec.table.rows.push_back({join_labels(labels), to_string(mult)});
      }
      rec.result = {{"hook", h.str()}, {"linear", rows}};
      if (is_power_of_two(n) && n >= 4) rec.result["degree2_distinct"] = a_count(exponent_of(n), x);
      return rec;
    }

    require_oracle(n);
    const auto d = restrict_oracle(h);
    if (mode == Mode::both) {
      if (oracle_linear(d) != linear_profile(h))
        throw consistency_error("linear constituents of " + h.str() + " differ between formula and oracle");
      if (is_power_of_two(n) && n >= 4 &&
          static_cast<long long>(degree_profile(d).distinct_at(1)) != a_count(exponent_of(n), x))
        throw consistency_error("degree-2 count of " + h.str() + " differs between formula and oracle");
    }
    rec.result["hook"] = h.str();
    if (profile_only) {
      const auto p = degree_profile(d);
      Json rows = Json::array();
      rec.table.header = {"degree", "distinct", "total"};
      for (const auto& [j, count] : p.distinct) {
        const auto deg = std::uint64_t{1} << j;
        rows.push_back({{"degree", deg}, {"distinct", count}, {"total", to_json(p.total.at(j))}});
        rec.table.rows.push_back({std::to_string(deg), std::to_string(count), to_string(p.total.at(j))});
      }
      rec.result["profile"] = rows;
      return rec;
    }
    Json rows = Json::array();
    rec.table.header = {"label", "degree", "multiplicity"};
    for (const auto& [label, mult] : d.constituents) {
      rows.push_back({{"label", label.str()}, {"degree", label.degree()}, {"multiplicity", to_json(mult)}});
      rec.table.rows.push_back({label.str(), std::to_string(label.degree()), to_string(mult)});
    }
    rec.result["constituents"] = rows;
    return rec;
  });
}

inline OutputRecord cmd_thresholds(int n, std::optional<unsigned> k, Mode mode = Mode::formula) {
  return timed([&] {
    if (n < 1) throw input_error("--n must be at least 1");
    const unsigned a = alpha(n);
    if (k && *k > a) throw input_error("--k exceeds alpha(n) = " + std::to_string(a));
    if (mode != Mode::formula) require_oracle(n);

    OutputRecord rec;
    rec.command = "thresholds";
    rec.inputs = {{"n", n}};
    if (k) rec.inputs["k"] = *k;
    rec.inputs["mode"] = mode_name(mode);
    rec.provenance = provenance(mode);
    long long tau_sum = 0;
    for (unsigned e : binary_expansion(n).exponents) tau_sum += e == 0 ? 1 : tau(e);

    Json rows = Json::array();
    rec.table.header = {"k", "T", "status"};
    const unsigned lo = k ? *k : 0, hi = k ? *k : a;
    std::optional<std::vector<BranchingDecomposition>> decs;
    if (mode != Mode::formula) decs = restrict_oracle_all(n);
    for (unsigned kk = lo; kk <= hi; ++kk) {
      Json row = {{"k", kk}};
      std::string status = "ok";
      std::optional<long long> t;
      try {
        t = T_threshold(n, kk);
      } catch (const oracle_horizon& e) {
        status = "needs-oracle@2^" + std::to_string(e.level());
      }
      if (!t && kk == a) {
        t = tau_sum;
        status = "tau";
      }
      if (decs) {
        long long side = 0;
        for (const auto& d : *decs)
          if (degree_profile(d).distinct_at(kk) > 0)
            side = std::max<long long>(side, std::max(d.hook.arm(), d.hook.x + 1));
        std::vector<HookPartition> members;
        for (const auto& d : *decs)
          if (degree_profile(d).distinct_at(kk) > 0) members.push_back(d.hook);
        if (members != hooks_in_box(n, static_cast<int>(side)))
          throw consistency_error("oracle H-set at k=" + std::to_string(kk) + " is not a box");
        if (mode == Mode::both && t && *t != side)
          throw consistency_error("threshold at k=" + std::to_string(kk) + " differs between formula and oracle");
        t = side;
        status = "ok";
      }
      row["T"] = t ? Json(*t) : Json(nullptr);
      row["status"] = status;
      if (kk == a) {
        row["tau_sum"] = tau_sum;
        row["tau_match"] = t && *t == tau_sum;
      }
      rec.table.rows.push_back({std::to_string(kk), t ? std::to_string(*t) : "", status});
      rows.push_back(row);
    }
    rec.result = {{"alpha", a}, {"rows", rows}};
    return rec;
  });
}

inline OutputRecord cmd_hset(int n, unsigned k, Mode mode = Mode::formula) {
  return timed([&] {
    if (n < 1) throw input_error("--n must be at least 1");
    if (k > alpha(n)) throw input_error("--k exceeds alpha(n) = " + std::to_string(alpha(n)));
    if (mode != Mode::formula) require_oracle(n);
    const Path path = mode == Mode::formula ? Path::formula : mode == Mode::oracle ? Path::oracle : Path::both;

    OutputRecord rec;
    rec.command = "hset";
    rec.inputs = {{"n", n}, {"k", k}, {"mode", mode_name(mode)}};
    rec.provenance = provenance(mode);
    Json hooks = Json::array();
    rec.table.header = {"hook"};
    for (const auto& h : h_set(n, k, path)) {
      hooks.push_back(h.str());
      rec.table.rows.push_back({h.str()});
    }
    rec.result = {{"hooks", hooks}};
    if (mode != Mode::oracle) rec.result["threshold"] = T_threshold(n, k);
    return rec;
  });
}

inline OutputRecord cmd_verify(int max_n, const std::vector<std::string>& suites) {
  return timed([&] {
    if (max_n < 1) throw input_error("--max-n must be at least 1");
    require_oracle(max_n);
    for (int n = 1; n <= max_n; ++n) require_oracle(n);
    const auto names = suites.empty() ? verify::suite_names() : suites;

    OutputRecord rec;
    rec.command = "verify";
    Json suites_json = names;
    rec.inputs = {{"max_n", max_n}, {"suites", suites_json}};
    rec.provenance = "both-agree";
    Json rows = Json::array();
    rec.table.header = {"suite", "status", "checks"};
    bool all = true;
    for (const auto& name : names) {
      const auto r = verify::run_suite(name, max_n);
      Json row = {{"suite", r.name}, {"status", r.passed ? "pass" : "fail"}, {"checks", r.checks}};
      if (!r.passed) row["counterexamples"] = r.counterexamples;
      rows.push_back(row);
      rec.table.rows.push_back({r.name, r.passed ? "pass" : "fail", std::to_string(r.checks)});
      all = all && r.passed;
    }
    rec.result = {{"passed", all}, {"suites", rows}};
    rec.exit_code = all ? 0 : 2;
    return rec;
  });
}

inline std::string format_csv(const Table& t) {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream out;
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << cell(t.header[i]);
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i]);
    out << "\n";
  }
  return out.str();
}

inline std::string format_pretty(const OutputRecord& rec) {
  std::vector<std::size_t> width(rec.table.header.size());
  for (std::size_t i = 0; i < width.size(); ++i) width[i] = rec.table.header[i].size();
  for (const auto& row : rec.table.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  out << rec.command << " " << rec.inputs.dump() << " [" << rec.provenance << "]\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << cells[i];
      if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
    }
    out << "\n";
  };
  line(rec.table.header);
  for (const auto& row : rec.table.rows) line(row);
  return out.str();
}

}  // namespace sbc::cli
