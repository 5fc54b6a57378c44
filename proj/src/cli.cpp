// Copyright 2026 The boundent Authors
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

#include "boundent/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "boundent/chessboard.hpp"
#include "boundent/criteria.hpp"
#include "boundent/io.hpp"
#include "boundent/sampling.hpp"

namespace boundent::cli {

namespace {

using chessboard::CanonicalParams;
using chessboard::Family;
using chessboard::RawParams;
using linalg::Complex;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string params;
  double phi_s = 0.0;
  double phi_t = 0.0;
  std::string input;
  std::string output;
  std::string format;
  std::uint64_t seed = 0;
  int count = 1;
  int restarts = 200;
  int max_iters = 500;
  double tol_psd = 1e-10;
  int threads = 0;
  std::string sweep_var;
  std::string sweep_range;
  std::string base;
};

double parse_real(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(x))
    throw UsageError("not a finite number: '" + std::string(token) + "'");
  return x;
}

// "re" or "re:im"
Complex parse_complex(std::string_view token) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) return {parse_real(token), 0.0};
  return {parse_real(token.substr(0, colon)), parse_real(token.substr(colon + 1))};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::array<double, 6> parse_six_reals(std::string_view list) {
  const auto tokens = split(list, ',');
  if (tokens.size() != 6) throw UsageError("expected 6 comma-separated values a,b,c,d,m,n");
  std::array<double, 6> x{};
  for (std::size_t k = 0; k < 6; ++k) x[k] = parse_real(tokens[k]);
  return x;
}

Family require_family(const std::string& name) {
  const auto f = chessboard::parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "' (expected a, b or raw)");
  return *f;
}

RawParams params_from_options(const Options& o) {
  const Family family = require_family(o.family);
  try {
    switch (family) {
      case Family::A: {
        const auto x = parse_six_reals(o.params);
        return chessboard::family_a(x[0], x[1], x[2], x[3], x[4], x[5]).to_raw();
      }
      case Family::B: {
        const auto x = parse_six_reals(o.params);
        return chessboard::family_b(x[0], x[1], x[2], x[3], x[4], x[5], o.phi_s, o.phi_t).to_raw();
      }
      case Family::Raw: {
        const auto tokens = split(o.params, ',');
        if (tokens.size() != 8) throw UsageError("raw family expects 8 values a,b,c,d,m,n,s,t (each re or re:im)");
        RawParams p;
        Complex* fields[] = {&p.a, &p.b, &p.c, &p.d, &p.m, &p.n, &p.s, &p.t};
        for (std::size_t k = 0; k < 8; ++k) *fields[k] = parse_complex(tokens[k]);
        return p;
      }
    }
  } catch (const chessboard::ParameterError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unreachable family");
}

criteria::RangeSearchConfig search_config(const Options& o) {
  if (o.restarts < 1) throw UsageError("--restarts must be >= 1");
  if (o.max_iters < 1) throw UsageError("--max-iters must be >= 1");
  criteria::RangeSearchConfig cfg;
  cfg.restarts = o.restarts;
  cfg.max_iters = o.max_iters;
  cfg.seed = o.seed;
  return cfg;
}

criteria::Tolerances tolerances(const Options& o) {
  if (!(o.tol_psd >= 0.0)) throw UsageError("--tol-psd must be nonnegative");
  criteria::Tolerances tol;
  tol.ppt = o.tol_psd;
  return tol;
}

// Writes `text` to --output or to `out`.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + o.output + "'");
  file << text;
  if (!file) throw UsageError("failed writing output file '" + o.output + "'");
}

std::string format_or(const Options& o, const char* fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "json" && f != "csv") throw UsageError("unknown format '" + f + "' (expected json or csv)");
  return f;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void apply_threads(const Options& o) {
  if (o.threads < 0) throw UsageError("--threads must be >= 0");
#ifdef _OPENMP
  if (o.threads > 0) omp_set_num_threads(o.threads);
#endif
}

// --- construct ---------------------------------------------------------------

int cmd_construct(const Options& o, std::ostream& out) {
  if (format_or(o, "json") != "json") throw UsageError("construct only writes json");
  const RawParams p = params_from_options(o);
  chessboard::StateMatrix state;
  try {
    state = chessboard::build_rho(p);
  } catch (const chessboard::ParameterError& e) {
    throw UsageError(e.what());
  }
  emit(o, out, dump(io::state_to_json(state)));
  return kExitOk;
}

// --- certify -----------------------------------------------------------------

RawParams params_from_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  try {
    const json doc = json::parse(in);
    return io::state_from_json(doc).params;
  } catch (const json::exception& e) {
    throw UsageError("malformed state file: " + std::string(e.what()));
  } catch (const io::FormatError& e) {
    throw UsageError("malformed state file: " + std::string(e.what()));
  }
}

int cmd_certify(const Options& o, std::ostream& out) {
  if (format_or(o, "json") != "json") throw UsageError("certify only writes json");
  if (!o.input.empty() && !o.params.empty()) throw UsageError("give either --input or --params, not both");
  const RawParams p = o.input.empty() ? params_from_options(o) : params_from_state_file(o.input);
  criteria::CertificationReport report;
  try {
    report = criteria::certify(p, search_config(o), tolerances(o));
  } catch (const chessboard::ParameterError& e) {
    throw UsageError(e.what());
  }
  emit(o, out, dump(io::report_to_json(report)));
  return report.verdict.kind == criteria::VerdictKind::Inconclusive ? kExitInconclusive : kExitOk;
}

// --- sample ------------------------------------------------------------------

std::string params_csv_header() {
  std::string h;
  for (const char* name : {"a", "b", "c", "d", "m", "n", "s", "t"}) {
    h += std::string(name) + "_re,";
    h += std::string(name) + "_im,";
  }
  return h;
}

std::string params_csv_fields(const RawParams& p) {
  std::string row;
  for (const Complex z : {p.a, p.b, p.c, p.d, p.m, p.n, p.s, p.t}) {
    row += io::format_double(z.real()) + ",";
    row += io::format_double(z.imag()) + ",";
  }
  return row;
}

int cmd_sample(const Options& o, std::ostream& out) {
  if (o.count < 1) throw UsageError("--count must be >= 1");
  const Family family = require_family(o.family);
  const std::string format = format_or(o, "csv");

  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(o.count));
  std::vector<RawParams> params(seeds.size());
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    seeds[k] = chessboard::item_seed(o.seed, k);
    params[k] = chessboard::sample_params(family, seeds[k]);
  }
  const auto reports = criteria::certify_batch(params, search_config(o), tolerances(o));

  std::ostringstream text;
  if (format == "csv") {
    text << "index,seed," << params_csv_header()
         << "pt_min_eigenvalue,sigma_equals_rho,analytic_range,search_residual,verdict\n";
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const auto& r = reports[k];
      text << k << ',' << seeds[k] << ',' << params_csv_fields(r.params) << io::format_double(r.pt_min_eigenvalue)
           << ',' << (r.sigma_equals_rho ? "true" : "false") << ',' << criteria::to_string(r.analytic_range) << ','
           << io::format_double(r.search_residual) << ',' << criteria::to_string(r.verdict.kind) << '\n';
    }
  } else {
    json rows = json::array();
    for (std::size_t k = 0; k < reports.size(); ++k)
      rows.push_back({{"index", k}, {"seed", seeds[k]}, {"report", io::report_to_json(reports[k])}});
    text << dump(rows);
  }
  emit(o, out, text.str());
  return kExitOk;
}

// --- sweep -------------------------------------------------------------------

struct SweepGrid {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;

  double at(int k) const { return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1); }
};

SweepGrid parse_grid(std::string_view spec) {
  const auto tokens = split(spec, ',');
  if (tokens.size() != 3) throw UsageError("--range expects lo,hi,steps");
  SweepGrid g{parse_real(tokens[0]), parse_real(tokens[1]), 0};
  const double steps = parse_real(tokens[2]);
  if (steps < 2 || steps != std::floor(steps) || steps > 1e7) throw UsageError("sweep needs an integer steps >= 2");
  g.steps = static_cast<int>(steps);
  return g;
}

// Family-b point with one variable overridden.
RawParams sweep_point(const std::string& var, double value, std::array<double, 6> base, double phi_s,
                      double phi_t) {
  static constexpr std::array<const char*, 6> kReal = {"a", "b", "c", "d", "m", "n"};
  for (std::size_t k = 0; k < kReal.size(); ++k)
    if (var == kReal[k]) base[k] = value;
  if (var == "phi_s") phi_s = value;
  if (var == "phi_t") phi_t = value;

  CanonicalParams p = chessboard::family_b(base[0], base[1], base[2], base[3], base[4], base[5], phi_s, phi_t);
  if (var == "|s|" || var == "abs_s") p.s = std::polar(value, phi_s);
  if (var == "|t|" || var == "abs_t") p.t = std::polar(value, phi_t);
  return p.to_raw();
}

int cmd_sweep(const Options& o, std::ostream& out) {
  static const std::vector<std::string> kVars = {"a", "b", "c", "d", "m", "n", "phi_s",
                                                 "phi_t", "|s|", "|t|", "abs_s", "abs_t"};
  if (std::find(kVars.begin(), kVars.end(), o.sweep_var) == kVars.end())
    throw UsageError("unknown sweep variable '" + o.sweep_var + "'");
  const SweepGrid grid = parse_grid(o.sweep_range);
  const auto base = parse_six_reals(o.base);
  const std::string format = format_or(o, "csv");

  std::vector<double> values(static_cast<std::size_t>(grid.steps));
  std::vector<RawParams> params(values.size());
  try {
    for (int k = 0; k < grid.steps; ++k) {
      values[k] = grid.at(k);
      params[k] = sweep_point(o.sweep_var, values[k], base, o.phi_s, o.phi_t);
    }
  } catch (const chessboard::ParameterError& e) {
    throw UsageError(e.what());
  }
  std::vector<criteria::CertificationReport> reports;
  try {
    reports = criteria::certify_batch(params, search_config(o), tolerances(o));
  } catch (const chessboard::ParameterError& e) {
    throw UsageError(e.what());
  }

  std::ostringstream text;
  if (format == "csv") {
    text << "value,pt_min_eigenvalue,search_residual,verdict\n";
    for (std::size_t k = 0; k < reports.size(); ++k)
      text << io::format_double(values[k]) << ',' << io::format_double(reports[k].pt_min_eigenvalue) << ','
           << io::format_double(reports[k].search_residual) << ',' << criteria::to_string(reports[k].verdict.kind)
           << '\n';
  } else {
    json rows = json::array();
    for (std::size_t k = 0; k < reports.size(); ++k)
      rows.push_back({{"value", values[k]},
                      {"pt_min_eigenvalue", reports[k].pt_min_eigenvalue},
                      {"search_residual", reports[k].search_residual},
                      {"verdict", std::string(criteria::to_string(reports[k].verdict.kind))}});
    text << dump(rows);
  }
  emit(o, out, text.str());
  return kExitOk;
}

void add_search_options(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Master seed");
  sub->add_option("--restarts", o.restarts, "Random restarts of the product-vector search");
  sub->add_option("--max-iters", o.max_iters, "Iterations per restart");
  sub->add_option("--tol-psd", o.tol_psd, "Partial transpose counts as PSD down to -tol");
  sub->add_option("--output,-o", o.output, "Output file (default stdout)");
  sub->add_option("--format", o.format, "json or csv");
  sub->add_option("--threads", o.threads, "OpenMP worker count (0 = runtime default)");
}

void add_param_options(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "a, b or raw");
  sub->add_option("--params", o.params, "a,b,c,d,m,n (families a, b) or a,b,c,d,m,n,s,t with re[:im] (raw)");
  sub->add_option("--phi-s", o.phi_s, "Phase of s (family b)");
  sub->add_option("--phi-t", o.phi_t, "Phase of t (family b)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Construct and certify 3x3 chessboard bound-entangled states", "boundent"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Write the density matrix of a parameter set as JSON");
  add_param_options(construct, o);
  construct->add_option("--output,-o", o.output, "Output file (default stdout)");
  construct->add_option("--format", o.format, "json");

  auto* certify = app.add_subcommand("certify", "Run PPT and range criteria; exit 3 when inconclusive");
  add_param_options(certify, o);
  certify->add_option("--input", o.input, "State JSON written by construct");
  add_search_options(certify, o);

  auto* sample = app.add_subcommand("sample", "Certify random draws from a family");
  sample->add_option("--family", o.family, "a, b or raw")->required();
  sample->add_option("--count", o.count, "Number of draws");
  add_search_options(sample, o);

  auto* sweep = app.add_subcommand("sweep", "Certify along a one-parameter line of family b");
  sweep->add_option("--var", o.sweep_var, "a b c d m n phi_s phi_t |s| |t|")->required();
  sweep->add_option("--range", o.sweep_range, "lo,hi,steps")->required();
  sweep->add_option("--base", o.base, "a,b,c,d,m,n")->required();
  sweep->add_option("--phi-s", o.phi_s, "Base phase of s");
  sweep->add_option("--phi-t", o.phi_t, "Base phase of t");
  add_search_options(sweep, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    apply_threads(o);
    if (*construct) {
      if (o.family.empty() || o.params.empty()) throw UsageError("construct needs --family and --params");
      return cmd_construct(o, out);
    }
    if (*certify) {
      if (o.input.empty() && (o.family.empty() || o.params.empty()))
        throw UsageError("certify needs --input or --family and --params");
      return cmd_certify(o, out);
    }
    if (*sample) return cmd_sample(o, out);
    if (*sweep) return cmd_sweep(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace boundent::cli
