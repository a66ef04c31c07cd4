// ifc3 — sum-rate outer bounds for the three-user Gaussian interference channel
// Copyright (C) 2026 the ifc3 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ifc3/json_io.hpp"
#include "ifc3/sweep.hpp"
#include "ifc3/verify.hpp"

namespace {

using namespace ifc3;

cd parse_complex_arg(const std::string& s) {
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw BadInput("expected \"re,im\", got \"" + s + "\"");
  if (in >> comma) {
    if (comma != ',' || !(in >> im))
      throw BadInput("expected \"re,im\", got \"" + s + "\"");
  }
  std::string rest;
  if (in >> rest) throw BadInput("trailing characters in \"" + s + "\"");
  return cd(re, im);
}

void parse_alpha_range(const std::string& s, RunConfig& cfg) {
  double a = 0.0, b = 0.0, st = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (in >> a) {
    if (in.eof()) {  // single point
      cfg.alpha_start = cfg.alpha_stop = a;
      cfg.alpha_step = 1.0;
      return;
    }
    if (in >> c1 >> b >> c2 >> st && c1 == ':' && c2 == ':' && in.eof()) {
      cfg.alpha_start = a;
      cfg.alpha_stop = b;
      cfg.alpha_step = st;
      return;
    }
  }
  throw BadInput("expected --alpha start:stop:step, got \"" + s + "\"");
}

std::array<bool, 5> parse_bounds_list(const std::string& csv) {
  if (csv == "all" || csv.empty()) return {true, true, true, true, true};
  std::array<bool, 5> enabled{};
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool known = false;
    for (int b = 0; b < 5; ++b) {
      if (item == kSweepBoundNames[b]) {
        enabled[b] = true;
        known = true;
      }
    }
    if (!known) throw BadInput("unknown bound \"" + item + "\"");
  }
  return enabled;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw BadInput("cannot write " + out_path);
  out << text;
}

struct ChannelArgs {
  std::string channel_file;
  std::string family;
  double power_db = 20.0;
  std::string h1, h2;

  ChannelMatrix resolve(FamilySpec* spec_out = nullptr) const {
    if (!channel_file.empty()) {
      if (!family.empty())
        throw BadInput("--channel and --family are mutually exclusive");
      return channel_from_json(load_json_file(channel_file));
    }
    if (family.empty())
      throw BadInput("one of --channel or --family is required");
    FamilySpec spec;
    spec.family = family_from_name(family);
    spec.power_db = power_db;
    if (!h1.empty()) spec.h1 = parse_complex_arg(h1);
    if (!h2.empty()) spec.h2 = parse_complex_arg(h2);
    if (spec_out) *spec_out = spec;
    return build_family(spec);
  }
};

int cmd_bound(const ChannelArgs& args, const std::string& bounds_csv,
              std::uint64_t seed, const std::string& format,
              const std::string& out_path) {
  const ChannelMatrix ch = args.resolve();
  const std::array<bool, 5> enabled = parse_bounds_list(bounds_csv);

  std::vector<BoundResult> results;
  if (enabled[0]) results.push_back(composite_sum_rate(ch, TwoUserRule::Kramer));
  if (enabled[1]) results.push_back(composite_sum_rate(ch, TwoUserRule::Etw));
  if (enabled[2]) results.push_back(th1_sum_rate(ch));
  if (enabled[3]) results.push_back(th2_sum_rate(ch));
  if (enabled[4]) results.push_back(mac_bound(ch, seed));

  if (format == "csv") {
    std::string text = "bound,value_bits\n";
    for (const auto& r : results) {
      text += bound_kind_name(r.kind);
      text += ',';
      text += ifc3::detail::num12(r.value_bits);
      text += '\n';
    }
    write_output(out_path, text);
  } else {
    json j = {{"channel", channel_to_json(ch)}, {"bounds", json::array()}};
    for (const auto& r : results) j["bounds"].push_back(bound_to_json(r));
    write_output(out_path, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_sweep(const ChannelArgs& args, const std::string& alpha,
              const std::string& bounds_csv, std::uint64_t seed,
              const std::string& format, const std::string& out_path) {
  if (args.family.empty())
    throw BadInput("sweep requires --family (alpha-parameterized)");
  RunConfig cfg;
  cfg.family.family = family_from_name(args.family);
  cfg.family.power_db = args.power_db;
  if (!args.h1.empty()) cfg.family.h1 = parse_complex_arg(args.h1);
  if (!args.h2.empty()) cfg.family.h2 = parse_complex_arg(args.h2);
  if (cfg.family.family == Family::MixedStrongVeryStrong)
    throw BadInput("mixed_strong_very_strong is not alpha-parameterized");
  parse_alpha_range(alpha, cfg);
  sweep_point_count(cfg);  // validates the range
  cfg.enabled = parse_bounds_list(bounds_csv);
  cfg.seed = seed;

  const SweepTable table = run_sweep(cfg);
  if (format == "json") {
    write_output(out_path, sweep_json(table).dump(2) + "\n");
  } else {
    write_output(out_path, sweep_csv(table));
    if (!out_path.empty()) {
      std::ofstream cj(out_path + ".crossovers.json");
      if (!cj) throw BadInput("cannot write " + out_path + ".crossovers.json");
      cj << crossovers_json(table).dump(2) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, int samples, std::uint64_t seed,
               const std::string& out_path) {
  std::vector<SuiteReport> reports;
  auto run = [&](const std::string& name) {
    if (name == "lemma")
      reports.push_back(verify_lemma(samples > 0 ? samples : 100, seed));
    else if (name == "th1")
      reports.push_back(verify_th1(samples > 0 ? samples : 100, seed));
    else if (name == "th2")
      reports.push_back(verify_th2(samples > 0 ? samples : 100, seed));
    else if (name == "mac")
      reports.push_back(verify_mac(samples > 0 ? samples : 50, seed));
    else
      throw BadInput("unknown suite \"" + name + "\"");
  };
  if (suite == "all") {
    run("lemma");
    run("th1");
    run("th2");
    run("mac");
  } else {
    run(suite);
  }

  bool all_pass = true;
  json out = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    out.push_back(suite_report_json(r));
    std::fprintf(stdout, "[%s] suite=%s samples=%d seed=%llu max_dev=%.3e tol=%.0e (%.1fs)\n",
                 r.pass ? "PASS" : "FAIL", r.suite.c_str(), r.samples,
                 static_cast<unsigned long long>(r.seed), r.max_dev,
                 r.tolerance, r.seconds);
    if (!r.pass)
      std::fprintf(stdout, "  worst instance: %s\n", r.worst.dump().c_str());
  }
  if (!out_path.empty()) write_output(out_path, out.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-rate outer bounds for the three-user Gaussian interference channel"};
  app.require_subcommand(1);

  ChannelArgs args;
  std::string bounds_csv = "all";
  std::string alpha = "0:1.6:0.01";
  std::string format;
  std::string out_path;
  std::uint64_t seed = 0;
  std::string suite = "all";
  int samples = 0;

  auto add_channel_opts = [&](CLI::App* cmd, bool with_file) {
    if (with_file)
      cmd->add_option("--channel", args.channel_file,
                      "Channel matrix JSON file");
    cmd->add_option("--family", args.family,
                    "fully_symmetric | cyclic_symmetric | "
                    "mixed_strong_very_strong | custom");
    cmd->add_option("--power-db", args.power_db, "Direct SNR in dB");
    cmd->add_option("--h1", args.h1, "First cross gain \"re,im\"");
    cmd->add_option("--h2", args.h2, "Second cross gain \"re,im\"");
  };

  CLI::App* bound = app.add_subcommand("bound", "Bounds for one channel");
  add_channel_opts(bound, true);
  bound->add_option("--bounds", bounds_csv, "Comma list of kra,etw,th1,th2,mac");
  bound->add_option("--seed", seed, "Optimizer seed");
  bound->add_option("--format", format, "json (default) | csv");
  bound->add_option("--out", out_path, "Output file (stdout if absent)");

  CLI::App* sweep = app.add_subcommand("sweep", "Bounds along an alpha range");
  add_channel_opts(sweep, false);
  sweep->add_option("--alpha", alpha, "Range start:stop:step");
  sweep->add_option("--bounds", bounds_csv, "Comma list of kra,etw,th1,th2,mac");
  sweep->add_option("--seed", seed, "Optimizer seed");
  sweep->add_option("--format", format, "csv (default) | json");
  sweep->add_option("--out", out_path,
                    "Output file; CSV also writes <out>.crossovers.json");

  CLI::App* verify = app.add_subcommand("verify", "Randomized oracle suites");
  verify->add_option("suite", suite, "lemma | th1 | th2 | mac | all");
  verify->add_option("--samples", samples, "Sample count (suite default if 0)");
  verify->add_option("--seed", seed, "Master seed");
  verify->add_option("--out", out_path, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound->parsed())
      return cmd_bound(args, bounds_csv, seed, format, out_path);
    if (sweep->parsed())
      return cmd_sweep(args, alpha, bounds_csv, seed, format, out_path);
    return cmd_verify(suite, samples, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
