#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

using sbc::cli::OutputRecord;

std::string render(const OutputRecord& rec, const std::string& format) {
  if (format == "csv") return sbc::cli::format_csv(rec.table);
  if (format == "pretty") return sbc::cli::format_pretty(rec);
  return rec.to_json().dump(2) + "\n";
}

int fail(const std::string& kind, const std::string& message, int code) {
  sbc::cli::Json err = {{"error", kind}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow branching coefficients of hook characters at the prime 2"};
  app.require_subcommand(1);

  int n = 0, x = 0, max_n = 8;
  std::optional<unsigned> k;
  std::vector<int> parts;
  bool profile = false;
  std::string mode, format = "json";
  std::vector<std::string> suites;

  const std::vector<std::string> modes{"formula", "oracle", "both"};
  const std::vector<std::string> formats{"json", "csv", "pretty"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  };
  auto with_mode = [&](CLI::App* sub) { sub->add_option("--mode", mode, "Evaluation path")->check(CLI::IsMember(modes)); };

  auto* linear = app.add_subcommand("linear", "Linear constituents of a hook restricted to P_n");
  linear->add_option("--n", n, "Degree n")->required();
  linear->add_option("--x", x, "Leg length of (n-x, 1^x)")->required();
  with_mode(linear);
  common(linear);

  auto* coeff = app.add_subcommand("coeff", "Multiplicity of one linear character of P_n");
  coeff->add_option("--n", n, "Degree n")->required();
  coeff->add_option("--x", x, "Leg length of (n-x, 1^x)")->required();
  coeff->add_option("--parts", parts, "Leg lengths x1,x2,... per binary digit of n")->required()->delimiter(',');
  with_mode(coeff);
  common(coeff);

  auto* restrict_cmd = app.add_subcommand("restrict", "Decompose a hook character restricted to P_n");
  restrict_cmd->add_option("--n", n, "Degree n")->required();
  restrict_cmd->add_option("--x", x, "Leg length of (n-x, 1^x)")->required();
  restrict_cmd->add_flag("--profile", profile, "Only the degree profile");
  with_mode(restrict_cmd);
  common(restrict_cmd);

  auto* thresholds = app.add_subcommand("thresholds", "Box thresholds T_n^k");
  thresholds->add_option("--n", n, "Degree n")->required();
  thresholds->add_option("--k", k, "Single degree exponent");
  with_mode(thresholds);
  common(thresholds);

  auto* hset = app.add_subcommand("hset", "Hooks whose restriction has a constituent of degree 2^k");
  hset->add_option("--n", n, "Degree n")->required();
  hset->add_option("--k", k, "Degree exponent")->required();
  with_mode(hset);
  common(hset);

  auto* verify = app.add_subcommand("verify", "Cross-check every closed formula against the oracle");
  verify->add_option("--max-n", max_n, "Largest n to sweep");
  verify->add_option("--suite", suites, "Suites to run (repeatable)")
      ->check(CLI::IsMember(sbc::verify::suite_names()));
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    OutputRecord rec;
    auto pick = [&](sbc::cli::Mode fallback) { return mode.empty() ? fallback : sbc::cli::parse_mode(mode); };
    using sbc::cli::Mode;
    if (linear->parsed())
      rec = sbc::cli::cmd_linear(n, x, pick(Mode::formula));
    else if (coeff->parsed())
      rec = sbc::cli::cmd_coeff(n, x, parts, pick(Mode::formula));
    else if (restrict_cmd->parsed())
      rec = sbc::cli::cmd_restrict(n, x, profile, pick(Mode::oracle));
    else if (thresholds->parsed())
      rec = sbc::cli::cmd_thresholds(n, k, pick(Mode::formula));
    else if (hset->parsed())
      rec = sbc::cli::cmd_hset(n, *k, pick(Mode::formula));
    else
      rec = sbc::cli::cmd_verify(max_n, suites);
    std::cout << render(rec, format);
    return rec.exit_code;
  } catch (const sbc::input_error& e) {
    return fail("input", e.what(), 1);
  } catch (const sbc::resource_limit& e) {
    return fail("resource", e.what(), 1);
  } catch (const sbc::consistency_error& e) {
    return fail("consistency", e.what(), 2);
  }
}
