// Copyright 2026 The ZZZY Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "zzzy/analysis.h"
#include "zzzy/channel.h"
#include "zzzy/code.h"
#include "zzzy/decoder.h"
#include "zzzy/monte_carlo.h"
#include "zzzy/plot.h"

namespace zzzy::cli {

namespace {

// Usage problems detected after CLI11 parsing (bad values, refused budgets).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kFlagKeys = {"trace", "wep", "sample", "random-ties"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool has_flag(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Merges a flat key=value config file into the argument list; flags given on
// the command line win.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) {
    return args;
  }
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read config file '" + path + "'");
  }
  std::string line;
  int lineno = 0;
  std::vector<std::string> extra;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw UsageError(path + ":" + std::to_string(lineno) + ": invalid key '" + key + "'");
    }
    if (has_flag(args, key)) {
      continue;
    }
    if (kFlagKeys.count(key)) {
      if (value == "true" || value == "1") {
        extra.push_back("--" + key);
      } else if (value != "false" && value != "0") {
        throw UsageError(path + ":" + std::to_string(lineno) + ": flag '" + key +
                         "' takes true or false");
      }
    } else {
      extra.push_back("--" + key + "=" + value);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  if (out.empty()) {
    throw UsageError("empty list '" + text + "'");
  }
  return out;
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) {
      return v;
    }
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("bad ") + what + " value '" + text + "'");
}

double parse_asymmetry_arg(const std::string& text) {
  try {
    return parse_asymmetry(text);
  } catch (const std::exception&) {
    throw UsageError("bad asymmetry value '" + text + "'");
  }
}

CodeFamily parse_family_arg(const std::string& text) {
  try {
    return parse_family(text);
  } catch (const std::exception&) {
    throw UsageError("unknown code family '" + text + "' (surface, zzzy, zzzy-dual, xzzx)");
  }
}

int parse_distance_arg(const std::string& text) {
  int d = 0;
  try {
    std::size_t used = 0;
    d = std::stoi(text, &used);
    if (used != text.size()) {
      d = 0;
    }
  } catch (const std::exception&) {
  }
  if (d < 3 || d % 2 == 0) {
    throw UsageError("distance must be an odd integer >= 3, got '" + text + "'");
  }
  return d;
}

SharedQubitRule parse_shared_rule(const std::string& text) {
  if (text == "neutral") {
    return SharedQubitRule::kNeutral;
  }
  if (text == "activation") {
    return SharedQubitRule::kActivationWins;
  }
  throw UsageError("shared-qubit rule must be neutral or activation, got '" + text + "'");
}

DecoderVariant parse_variant_arg(const std::string& text) {
  try {
    return parse_variant(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// Output sink: --out file when given, the caller's stream otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw UsageError("cannot write '" + path + "'");
      }
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void write_comments(std::ostream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) {
    out << "# " << c << '\n';
  }
}

std::string sig2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", x);
  return buf;
}

struct Options {
  std::string code = "zzzy";
  std::string distance = "3";
  std::string error;
  bool trace = false;
  std::string variant = "standard";
  std::string shared_qubit = "neutral";
  int weight = 0;
  uint64_t budget = 1'000'000'000;
  unsigned workers = 1;
  bool sample = false;
  uint64_t samples = 10'000'000;
  uint64_t seed = 1;
  bool random_ties = false;
  std::string p = "0.001";
  std::string asymmetry = "1";
  bool wep = false;
  uint64_t trials = 100000;
  std::string out;
  std::string in;
  std::string x_axis = "auto";
  std::string title;
  std::string config;
};

Decoder make_cli_decoder(const StabilizerCode& code, const Options& o) {
  DecoderOptions options;
  const DecoderVariant variant = parse_variant_arg(o.variant);
  options.update_weights = variant != DecoderVariant::kPlainMatching;
  options.guard_weight_update = variant != DecoderVariant::kUnguarded;
  options.shared_qubit = parse_shared_rule(o.shared_qubit);
  return Decoder(code, options);
}

EnumerationOptions enumeration_options(const Options& o) {
  EnumerationOptions e;
  e.budget = o.budget;
  e.allow_sampling = o.sample;
  e.samples_per_class = o.samples;
  e.sampling_seed = o.seed;
  e.workers = std::max(1u, o.workers);
  return e;
}

FractionTable enumerate_or_refuse(const Decoder& decoder, int j, const EnumerationOptions& e) {
  try {
    return enumerate_fractions(decoder, j, e);
  } catch (const BudgetExceeded& ex) {
    throw UsageError(ex.what());
  }
}

std::vector<std::string> base_comments(const std::string& command) {
  return {std::string("tool=") + kToolVersion, "command=" + command};
}

int cmd_build(const Options& o, std::ostream& out) {
  const auto code = build_code(parse_family_arg(o.code), parse_distance_arg(o.distance));
  Sink sink(o.out, out);
  if (sink.to_file()) {
    auto c = base_comments("build");
    c.push_back("code=" + o.code);
    c.push_back("distance=" + o.distance);
    write_comments(*sink, c);
  }
  *sink << code.dump();
  return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const auto code = build_code(parse_family_arg(o.code), parse_distance_arg(o.distance));
  PauliOperator e;
  try {
    e = PauliOperator::parse(o.error, code.num_qubits());
  } catch (const std::exception& ex) {
    throw UsageError(std::string("bad --error: ") + ex.what());
  }
  const Decoder decoder = make_cli_decoder(code, o);
  const DecodeResult r = decoder.decode(syndrome(code, e));
  Sink sink(o.out, out);
  if (sink.to_file()) {
    auto c = base_comments("decode");
    c.insert(c.end(), {"code=" + o.code, "distance=" + o.distance, "error=" + o.error,
                       "variant=" + o.variant, "shared-qubit=" + o.shared_qubit});
    write_comments(*sink, c);
  }
  *sink << "error: " << e.str() << '\n';
  if (o.trace) {
    *sink << format_trace(code, r);
  }
  *sink << "correction: " << r.e_hat.str() << '\n';
  *sink << "residual_class: " << residual_class_name(residual_class(e, r, code)) << '\n';
  return kExitOk;
}

void print_table(std::ostream& out, const std::string& row_name, const FractionTable& t) {
  out << std::left;
  out.width(28);
  out << "class";
  for (const auto& e : t.entries) {
    out.width(14);
    out << e.label();
  }
  out << '\n';
  out.width(28);
  out << row_name;
  for (const auto& e : t.entries) {
    out.width(14);
    out << sig2(e.fraction());
  }
  out << '\n';
  out.width(28);
  out << "  failures/patterns";
  for (const auto& e : t.entries) {
    out.width(14);
    out << std::to_string(e.failures) + "/" + std::to_string(e.patterns);
  }
  out << '\n';
  if (!t.exhaustive()) {
    out.width(28);
    out << "  95% interval";
    for (const auto& e : t.entries) {
      out.width(14);
      out << sig2(e.ci_lo) + "-" + sig2(e.ci_hi);
    }
    out << '\n';
  }
  out << std::right;
}

void write_fraction_csv(std::ostream& out, const FractionTable& t, const std::string& tie_break) {
  for (const auto& e : t.entries) {
    out << family_name(t.family) << ',' << t.distance << ',' << t.weight << ',' << tie_break << ','
        << e.label() << ',' << e.num_z << ',' << e.num_x << ',' << e.num_y << ',' << e.failures
        << ',' << e.patterns << ',' << format_number(e.fraction()) << ','
        << format_number(e.ci_lo) << ',' << format_number(e.ci_hi) << ','
        << (e.sampled ? "sampled" : "exhaustive") << '\n';
  }
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto code = build_code(parse_family_arg(o.code), parse_distance_arg(o.distance));
  const int j = o.weight == 0 ? code.t() + 1 : o.weight;
  if (j < 1 || j > code.t() + 1) {
    throw UsageError("--weight must lie in 1.." + std::to_string(code.t() + 1));
  }
  const Decoder decoder = make_cli_decoder(code, o);
  auto e = enumeration_options(o);
  const FractionTable det = enumerate_or_refuse(decoder, j, e);
  std::optional<FractionTable> rnd;
  if (o.random_ties) {
    e.tie_break_seed = o.seed;
    rnd = enumerate_or_refuse(decoder, j, e);
  }

  const std::string name = std::string(family_name(code.family())) + " d=" + o.distance;
  out << "fraction of weight-" << j << " errors not corrected\n";
  print_table(out, name, det);
  if (rnd) {
    print_table(out, name + " (random ties)", *rnd);
  }
  if (!o.out.empty()) {
    Sink sink(o.out, out);
    auto c = base_comments("enumerate");
    c.insert(c.end(), {"code=" + o.code, "distance=" + o.distance, "weight=" + std::to_string(j),
                       "budget=" + std::to_string(o.budget), "sample=" + std::string(o.sample ? "true" : "false"),
                       "samples=" + std::to_string(o.samples), "seed=" + std::to_string(o.seed),
                       "random-ties=" + std::string(o.random_ties ? "true" : "false"),
                       "variant=" + o.variant, "shared-qubit=" + o.shared_qubit});
    write_comments(*sink, c);
    *sink << "family,d,j,tie_break,class,num_z,num_x,num_y,numerator,denominator,fraction,ci_lo,"
             "ci_hi,mode\n";
    write_fraction_csv(*sink, det, "deterministic");
    if (rnd) {
      write_fraction_csv(*sink, *rnd, "random");
    }
  }
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto code = build_code(parse_family_arg(o.code), parse_distance_arg(o.distance));
  const double p = parse_double(o.p, "p");
  std::vector<double> asymmetries;
  for (const auto& a : split_list(o.asymmetry)) {
    asymmetries.push_back(parse_asymmetry_arg(a));
  }
  for (double a : asymmetries) {
    try {
      make_channel(p, a);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }
  const Decoder decoder = make_cli_decoder(code, o);
  const int j = code.t() + 1;
  const FractionTable table = enumerate_or_refuse(decoder, j, enumeration_options(o));

  Sink sink(o.out, out);
  auto c = base_comments("analyze");
  c.insert(c.end(), {"code=" + o.code, "distance=" + o.distance, "p=" + o.p,
                     "asymmetry=" + o.asymmetry, "wep=" + std::string(o.wep ? "true" : "false"),
                     "variant=" + o.variant, "shared-qubit=" + o.shared_qubit,
                     "table=" + std::string(table.exhaustive() ? "exhaustive" : "sampled")});
  write_comments(*sink, c);
  *sink << "quantity,index,A,value\n";
  for (double a : asymmetries) {
    const ChannelModel ch = make_channel(p, a);
    const std::string as = format_asymmetry(a);
    if (p > 0.0) {
      *sink << "beta," << j << ',' << as << ',' << format_number(beta(table, ch)) << '\n';
    }
    *sink << "pl_approx," << j << ',' << as << ',' << format_number(pl_approx(code, ch, table))
          << '\n';
  }
  if (code.family() == CodeFamily::kZzzy && code.distance() > 3) {
    *sink << "lemma1_fraction," << j << ",," << format_number(lemma1_fraction(code.distance(), code.t(), code.num_qubits()))
          << '\n';
    *sink << "lemma1_count," << j << ",," << lemma1_count(code.distance(), code.t()) << '\n';
  }
  if (o.wep) {
    if (code.num_generators() > kMaxEnumeratorGenerators) {
      throw UsageError("--wep needs at most " + std::to_string(kMaxEnumeratorGenerators) +
                       " generators; this code has " + std::to_string(code.num_generators()));
    }
    const WeightEnumerator w = weight_enumerator(code);
    for (std::size_t k = 0; k < w.coefficients.size(); ++k) {
      *sink << "wep," << k << ",," << w.coefficients[k] << '\n';
    }
    *sink << "wep_total,,," << w.total() << '\n';
  }
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  std::vector<TrialConfig> grid;
  const DecoderVariant variant = parse_variant_arg(o.variant);
  for (const auto& family : split_list(o.code)) {
    for (const auto& d : split_list(o.distance)) {
      for (const auto& p : split_list(o.p)) {
        for (const auto& a : split_list(o.asymmetry)) {
          TrialConfig cfg;
          cfg.family = parse_family_arg(family);
          cfg.distance = parse_distance_arg(d);
          cfg.p = parse_double(p, "p");
          cfg.asymmetry = parse_asymmetry_arg(a);
          cfg.trials = o.trials;
          cfg.seed = o.seed;
          cfg.variant = variant;
          try {
            validate(cfg);
          } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
          }
          grid.push_back(cfg);
        }
      }
    }
  }
  const auto results = sweep(grid, std::max(1u, o.workers));
  Sink sink(o.out, out);
  auto c = base_comments("simulate");
  c.insert(c.end(), {"code=" + o.code, "distance=" + o.distance, "p=" + o.p,
                     "asymmetry=" + o.asymmetry, "trials=" + std::to_string(o.trials),
                     "seed=" + std::to_string(o.seed), "variant=" + o.variant,
                     "workers=" + std::to_string(o.workers),
                     "ci=wilson95"});
  write_csv(*sink, results, c);
  return kExitOk;
}

int cmd_plot(const Options& o, std::ostream& out) {
  std::ifstream in(o.in);
  if (!in) {
    throw UsageError("cannot read '" + o.in + "'");
  }
  std::vector<CsvRow> rows;
  try {
    rows = read_csv(in);
  } catch (const std::runtime_error& ex) {
    throw UsageError(o.in + ": " + ex.what());
  }
  PlotOptions po;
  po.x_axis = o.x_axis;
  po.title = o.title;
  Sink sink(o.out, out);
  *sink << "<!-- " << kToolVersion << " command=plot in=" << o.in << " x=" << o.x_axis
        << " -->\n";
  try {
    write_svg(*sink, rows, po);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surface, XZZX and ZZZY codes with matching decoders", "zzzy"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Options o;

  auto add_code = [&](CLI::App* s) {
    s->add_option("--code", o.code, "surface | zzzy | zzzy-dual | xzzx")->capture_default_str();
    s->add_option("--distance", o.distance, "odd code distance")->capture_default_str();
  };
  auto add_decoder = [&](CLI::App* s) {
    s->add_option("--variant", o.variant, "standard | plain (no weight update) | unguarded")
        ->capture_default_str();
    s->add_option("--shared-qubit", o.shared_qubit,
                  "split-state rule for doubly Y-measured qubits: neutral | activation")
        ->capture_default_str();
  };
  auto add_enumeration = [&](CLI::App* s) {
    s->add_option("--budget", o.budget, "largest exhaustive decode count")->capture_default_str();
    s->add_option("--workers", o.workers, "worker threads")->capture_default_str();
    s->add_flag("--sample", o.sample, "sample each class when over budget");
    s->add_option("--samples", o.samples, "samples per class")->capture_default_str();
    s->add_option("--seed", o.seed, "sampling and tie-break seed")->capture_default_str();
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "output path (default stdout)");
    s->add_option("--config", o.config, "flat key = value file; command-line flags win");
  };

  auto* build = app.add_subcommand("build", "print the stabilizer generators");
  add_code(build);
  add_common(build);

  auto* decode = app.add_subcommand("decode", "decode a single error");
  add_code(decode);
  add_decoder(decode);
  decode->add_option("--error", o.error, "Pauli error, e.g. \"Z2 Z3\"")->required();
  decode->add_flag("--trace", o.trace, "print weights, matchings and the flip step");
  add_common(decode);

  auto* enumerate = app.add_subcommand("enumerate", "fractions of uncorrected weight-j errors");
  add_code(enumerate);
  add_decoder(enumerate);
  add_enumeration(enumerate);
  enumerate->add_option("--weight", o.weight, "error weight j (default t+1)");
  enumerate->add_flag("--random-ties", o.random_ties, "also report random tie-breaking");
  add_common(enumerate);

  auto* analyze = app.add_subcommand("analyze", "beta, p_L approximation, row-confined Z failures, enumerator");
  add_code(analyze);
  add_decoder(analyze);
  add_enumeration(analyze);
  analyze->add_option("--p", o.p, "physical error rate")->capture_default_str();
  analyze->add_option("--asymmetry", o.asymmetry, "asymmetry A (float or inf; comma list)")
      ->capture_default_str();
  analyze->add_flag("--wep", o.wep, "undetectable-error weight enumerator");
  add_common(analyze);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo logical error rates as CSV");
  simulate->add_option("--code", o.code, "family or comma list")->capture_default_str();
  simulate->add_option("--distance", o.distance, "distance or comma list")->capture_default_str();
  simulate->add_option("--p", o.p, "error rate or comma list")->capture_default_str();
  simulate->add_option("--asymmetry", o.asymmetry, "asymmetry or comma list")
      ->capture_default_str();
  simulate->add_option("--trials", o.trials, "trials per cell")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", o.seed, "base seed")->capture_default_str();
  simulate->add_option("--workers", o.workers, "worker threads")->capture_default_str();
  simulate->add_option("--variant", o.variant, "standard | plain | unguarded")->capture_default_str();
  add_common(simulate);

  auto* plot = app.add_subcommand("plot", "SVG chart from a simulate CSV");
  plot->add_option("--in", o.in, "simulate CSV")->required();
  plot->add_option("--x", o.x_axis, "abscissa: auto | A | p")->capture_default_str();
  plot->add_option("--title", o.title, "chart title");
  add_common(plot);

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (decode->parsed()) return cmd_decode(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (plot->parsed()) return cmd_plot(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace zzzy::cli
