// Copyright 2026 The fusionhg Authors
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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "fusionhg/cli.hpp"
#include "fusionhg/core.hpp"
#include "fusionhg/error.hpp"
#include "fusionhg/fourier.hpp"
#include "fusionhg/product_dual.hpp"
#include "fusionhg/su2_dual.hpp"

namespace fusionhg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Config {
  std::string dual = "su2";
  std::string K;
  std::string V;
  std::string f;
  std::string g;
  std::string x;
  std::string y;
  std::string epsilon;
  std::string D = "11/10";
  std::string p;
  int N = 5;
  std::string max_ell = "3";
  std::string strategy;
  std::size_t max_size = 0;
  std::size_t nodes = QuadratureConfig{}.nodes;
  double tolerance = QuadratureConfig{}.tolerance;
  std::string scheme = "gauss-legendre";
  std::string out;
  std::string format;
  std::string verify;
  unsigned threads = 0;
  bool no_timestamp = false;
};

struct Output {
  std::string body;
  int status = 0;
  std::string summary;
};

double parse_p(const std::string& text, double fallback) {
  if (text.empty()) return fallback;
  if (text == "inf" || text == "infinity") return kInfinity;
  const Rational r = parse_rational(text);
  return to_double(r);
}

std::string format_of(const Config& c) {
  if (!c.format.empty()) return c.format;
  if (c.out.ends_with(".csv")) return "csv";
  return "json";
}

[[noreturn]] void format_unsupported(const std::string& format, const char* command) {
  fail(ErrorKind::usage, "format '" + format + "' is not available for " + command);
}

ordered_json labels_json(const Hypergroup& hg, const LabelSet& s) {
  ordered_json a = ordered_json::array();
  for (const Label& x : s) a.push_back(hg.format_label(x));
  return a;
}

ordered_json function_json(const Hypergroup& hg, const ExactFunction& f) {
  ordered_json o = ordered_json::object();
  for (const auto& [x, v] : f) o[hg.format_label(x)] = to_string(v);
  return o;
}

std::string finish(ordered_json doc, const Config& c) {
  if (!c.no_timestamp) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    doc["generated_at"] = fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
  }
  return doc.dump(2) + "\n";
}

// Points to sample or list: the universe when finite, pi_l with l <= max_ell
// for SU(2), and products of those.
std::vector<Label> sample_points(const Hypergroup& hg, Spin max_ell) {
  if (auto u = hg.universe()) return *u;
  if (dynamic_cast<const Su2Dual*>(&hg) != nullptr) {
    LabelSet b = Su2Dual::ball(max_ell);
    return {b.begin(), b.end()};
  }
  if (const auto* prod = dynamic_cast<const ProductDual*>(&hg)) {
    std::vector<LabelSet> sets;
    for (std::size_t i = 0; i < prod->num_factors(); ++i) {
      sets.push_back(make_label_set(sample_points(prod->factor(i), max_ell)));
    }
    LabelSet all = prod->cartesian(sets);
    return {all.begin(), all.end()};
  }
  fail(ErrorKind::usage, "cannot enumerate points of " + hg.name());
}

Output cmd_axioms(const Config& c) {
  auto hg = parse_dual(c.dual);
  const auto sample = sample_points(*hg, Spin::parse(c.max_ell));
  const AxiomReport r = check_axioms(*hg, sample, c.threads);
  const std::string format = format_of(c);
  Output o;
  o.status = r.ok() ? 0 : exit_code(ErrorKind::axiom_violation);
  if (format == "pretty") {
    o.body = fmt::format("{}: {} points, {} pairs, {} triples, {} failures\n", hg->name(),
                         r.sample_size, r.pairs_checked, r.triples_checked, r.failures.size());
    for (const auto& f : r.failures) {
      std::string w;
      for (const Label& x : f.witness) w += (w.empty() ? "" : " ") + hg->format_label(x);
      o.body += fmt::format("  {} at ({}): {}\n", f.check, w, f.detail);
    }
    return o;
  }
  if (format != "json") format_unsupported(format, "axioms");
  ordered_json doc;
  doc["dual"] = hg->name();
  doc["sample_size"] = r.sample_size;
  doc["pairs_checked"] = r.pairs_checked;
  doc["triples_checked"] = r.triples_checked;
  doc["ok"] = r.ok();
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) {
    ordered_json item;
    item["check"] = f.check;
    ordered_json w = ordered_json::array();
    for (const Label& x : f.witness) w.push_back(hg->format_label(x));
    item["witness"] = std::move(w);
    item["detail"] = f.detail;
    failures.push_back(std::move(item));
  }
  doc["failures"] = std::move(failures);
  o.body = finish(std::move(doc), c);
  return o;
}

Output cmd_haar(const Config& c) {
  auto hg = parse_dual(c.dual);
  std::vector<Label> points;
  if (!c.x.empty()) {
    LabelSet s = parse_label_list(*hg, c.x);
    points.assign(s.begin(), s.end());
  } else {
    points = sample_points(*hg, Spin::parse(c.max_ell));
  }
  const std::string format = format_of(c);
  Output o;
  if (format == "csv") {
    o.body = "label,haar\n";
    for (const Label& x : points) {
      o.body += fmt::format("\"{}\",{}\n", hg->format_label(x), to_string(hg->haar(x)));
    }
    return o;
  }
  if (format == "pretty") {
    for (const Label& x : points) {
      o.body += fmt::format("{:>12}  {}\n", hg->format_label(x), to_string(hg->haar(x)));
    }
    return o;
  }
  if (format != "json") format_unsupported(format, "haar");
  ordered_json doc;
  doc["dual"] = hg->name();
  ordered_json masses = ordered_json::array();
  for (const Label& x : points) {
    ordered_json item;
    item["label"] = hg->format_label(x);
    item["haar"] = to_string(hg->haar(x));
    masses.push_back(std::move(item));
  }
  doc["haar"] = std::move(masses);
  o.body = finish(std::move(doc), c);
  return o;
}

Output cmd_convolve(const Config& c) {
  auto hg = parse_dual(c.dual);
  ordered_json doc;
  doc["dual"] = hg->name();
  ExactFunction result;
  if (!c.x.empty() || !c.y.empty()) {
    if (c.x.empty() || c.y.empty()) fail(ErrorKind::usage, "--x and --y go together");
    const Label x = hg->parse_label(c.x);
    const Label y = hg->parse_label(c.y);
    result = convolve_points(*hg, x, y).as_function();
    doc["kind"] = "fusion";
    doc["x"] = hg->format_label(x);
    doc["y"] = hg->format_label(y);
  } else {
    if (c.f.empty() || c.g.empty()) fail(ErrorKind::usage, "convolve needs --x/--y or --f/--g");
    result = convolve_h(*hg, parse_function(*hg, c.f), parse_function(*hg, c.g));
    doc["kind"] = "weighted";
  }
  Output o;
  const std::string format = format_of(c);
  if (format == "pretty") {
    for (const auto& [z, v] : result) o.body += fmt::format("{:>12}  {}\n", hg->format_label(z), to_string(v));
    return o;
  }
  if (format != "json") format_unsupported(format, "convolve");
  doc["result"] = function_json(*hg, result);
  o.body = finish(std::move(doc), c);
  return o;
}

LeptinCertificate product_search(const ProductDual& prod, const LabelSet& K,
                                 const Rational& epsilon, const Config& c) {
  const std::size_t F = prod.num_factors();
  // prod (1 + eps_i) <= 1 + epsilon for eps_i = epsilon / (F (1 + epsilon)).
  const Rational eps_i = epsilon / (Rational(static_cast<long>(F)) * (1 + epsilon));
  std::vector<LeptinCertificate> certs;
  for (std::size_t i = 0; i < F; ++i) {
    const Hypergroup& factor = prod.factor(i);
    LabelSet Ki;
    for (const Label& k : K) Ki.insert(prod.split(k)[i]);
    if (dynamic_cast<const Su2Dual*>(&factor) != nullptr) {
      certs.push_back(leptin_search_interval(Spin::from_twice(Ki.rbegin()->operator[](0)), eps_i));
      continue;
    }
    auto u = factor.universe();
    if (u && u->size() <= kExhaustiveCap) {
      auto cert = leptin_search_exhaustive(factor, Ki, eps_i, kExhaustiveCap, c.threads);
      if (!satisfied(cert)) fail(ErrorKind::capacity, "factor " + std::to_string(i) + " has no V below 1 + epsilon");
      certs.push_back(std::move(cert));
      continue;
    }
    GreedyOptions options;
    if (c.max_size) options.max_size = c.max_size;
    auto cert = leptin_search_greedy(factor, Ki, eps_i, options);
    if (!cert) fail(ErrorKind::capacity, "greedy search failed in factor " + std::to_string(i));
    certs.push_back(std::move(*cert));
  }
  return leptin_product(prod, certs);
}

Output cmd_leptin(const Config& c) {
  auto hg = parse_dual(c.dual);
  ReportOptions opt{!c.no_timestamp};
  Output o;
  if (!c.verify.empty()) {
    std::ifstream in(c.verify, std::ios::binary);
    if (!in) fail(ErrorKind::usage, "cannot open certificate '" + c.verify + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const ParsedCertificate p = parse_certificate(*hg, buffer.str());
    const Rational recomputed = leptin_ratio(*hg, p.cert.K, p.cert.V);
    const bool ok = recomputed == p.cert.ratio && satisfied(p.cert);
    ordered_json doc;
    doc["dual"] = hg->name();
    doc["stored_ratio"] = to_string(p.cert.ratio);
    doc["recomputed_ratio"] = to_string(recomputed);
    doc["epsilon"] = to_string(p.cert.epsilon);
    doc["verified"] = ok;
    o.body = finish(std::move(doc), c);
    o.status = ok ? 0 : 1;
    return o;
  }
  if (c.epsilon.empty()) fail(ErrorKind::usage, "leptin needs --epsilon");
  const Rational epsilon = parse_rational(c.epsilon);
  if (sgn(epsilon) <= 0) fail(ErrorKind::usage, "--epsilon must be positive");
  const bool su2 = dynamic_cast<const Su2Dual*>(hg.get()) != nullptr;
  const auto* prod = dynamic_cast<const ProductDual*>(hg.get());
  std::string strategy = c.strategy;
  if (strategy.empty()) strategy = su2 ? "interval" : prod ? "product" : "exhaustive";
  const LeptinStrategy s = parse_strategy(strategy);

  std::optional<LeptinCertificate> cert;
  if (s == LeptinStrategy::interval) {
    if (!su2) fail(ErrorKind::usage, "the interval strategy needs --dual su2");
    cert = leptin_search_interval(Spin::parse(c.K.empty() ? "0" : c.K), epsilon);
  } else {
    const LabelSet K = c.K.empty() ? LabelSet{hg->identity()} : parse_label_list(*hg, c.K);
    if (s == LeptinStrategy::greedy) {
      GreedyOptions options;
      if (c.max_size) options.max_size = c.max_size;
      cert = leptin_search_greedy(*hg, K, epsilon, options);
    } else if (s == LeptinStrategy::exhaustive) {
      cert = leptin_search_exhaustive(*hg, K, epsilon, c.max_size ? c.max_size : kExhaustiveCap,
                                      c.threads);
    } else {
      if (!prod) fail(ErrorKind::usage, "the product strategy needs a product dual");
      cert = product_search(*prod, K, epsilon, c);
    }
  }
  const std::string format = format_of(c);
  if (!cert) {
    ordered_json doc;
    doc["strategy"] = strategy;
    doc["dual"] = hg->name();
    doc["found"] = false;
    o.body = finish(std::move(doc), c);
    return o;
  }
  const bool verified = verify_certificate(*hg, *cert);
  if (format == "pretty") {
    o.body = fmt::format("{} on {}: |K| = {}, |V| = {}, ratio {} (~{}), epsilon {}, {}\n",
                         to_string(cert->strategy), hg->name(), cert->K.size(), cert->V.size(),
                         to_string(cert->ratio), format_double(to_double(cert->ratio)),
                         to_string(cert->epsilon), verified ? "verified" : "NOT verified");
    return o;
  }
  if (format != "json") format_unsupported(format, "leptin");
  o.body = certificate_json(*hg, *cert, verified, opt);
  return o;
}

Output cmd_bump(const Config& c) {
  auto hg = parse_dual(c.dual);
  if (c.K.empty() || c.V.empty()) fail(ErrorKind::usage, "bump needs --K and --V");
  QuadratureConfig q{c.nodes, c.tolerance, parse_scheme(c.scheme)};
  q.validate();
  const BumpFunction b = bump(*hg, parse_label_list(*hg, c.K), parse_label_list(*hg, c.V));
  std::optional<double> a;
  try {
    a = a_norm_bump(*hg, b, q);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::usage) throw;
  }
  Output o;
  const std::string format = format_of(c);
  if (format == "pretty") {
    for (const auto& [z, v] : b.u) o.body += fmt::format("{:>12}  {}\n", hg->format_label(z), to_string(v));
    o.body += fmt::format("bound^2 {}, bound {}, A-norm {}\n", to_string(b.bound_squared),
                          format_double(b.a_norm_bound()), a ? format_double(*a) : "-");
    return o;
  }
  if (format != "json") format_unsupported(format, "bump");
  ordered_json doc;
  doc["dual"] = hg->name();
  doc["K"] = labels_json(*hg, b.K);
  doc["V"] = labels_json(*hg, b.V);
  doc["u"] = function_json(*hg, b.u);
  doc["bound_squared"] = to_string(b.bound_squared);
  doc["a_bound"] = b.a_norm_bound();
  doc["a_value"] = a ? ordered_json(*a) : ordered_json(nullptr);
  doc["a_within_bound"] = a ? ordered_json(*a <= b.a_norm_bound() + 1e-6) : ordered_json(nullptr);
  o.body = finish(std::move(doc), c);
  return o;
}

Output cmd_norms(const Config& c) {
  auto hg = parse_dual(c.dual);
  if (c.f.empty()) fail(ErrorKind::usage, "norms needs --f");
  const ExactFunction f = parse_function(*hg, c.f);
  const double p = parse_p(c.p, 1.0);
  QuadratureConfig q{c.nodes, c.tolerance, parse_scheme(c.scheme)};
  q.validate();
  const NormValue lp = lp_h_norm(*hg, f, p);
  std::optional<double> a;
  std::optional<Rational> a_exact;
  if (const auto* finite = dynamic_cast<const FiniteDual*>(hg.get())) {
    const NormValue v = a_norm_exact_finite(*finite, f);
    a = v.value;
    a_exact = v.exact;
  } else if (dynamic_cast<const Su2Dual*>(hg.get()) != nullptr) {
    a = a_norm_su2(f, q);
  }
  std::optional<NormValue> segal;
  if (p >= 1 && p <= 2) segal = segal_cp_norm_central(*hg, f, p);
  Output o;
  const std::string format = format_of(c);
  if (format == "pretty") {
    o.body = fmt::format("l^p(h) p={}: {}\nA-norm: {}\nSegal C^p: {}\n", format_double(p),
                         lp.exact ? to_string(*lp.exact) : format_double(lp.value),
                         a_exact ? to_string(*a_exact) : a ? format_double(*a) : "-",
                         segal ? format_double(segal->value) : "-");
    return o;
  }
  if (format != "json") format_unsupported(format, "norms");
  ordered_json doc;
  doc["dual"] = hg->name();
  doc["p"] = std::isinf(p) ? ordered_json("inf") : ordered_json(p);
  doc["lp_h"] = lp.value;
  doc["lp_h_exact"] = lp.exact ? ordered_json(to_string(*lp.exact)) : ordered_json(nullptr);
  doc["lp_h_power"] = lp.exact_power ? ordered_json(to_string(*lp.exact_power)) : ordered_json(nullptr);
  doc["a_norm"] = a ? ordered_json(*a) : ordered_json(nullptr);
  doc["a_norm_exact"] = a_exact ? ordered_json(to_string(*a_exact)) : ordered_json(nullptr);
  doc["segal_p"] = segal ? ordered_json(segal->value) : ordered_json(nullptr);
  o.body = finish(std::move(doc), c);
  return o;
}

Output cmd_witness(const Config& c) {
  auto hg = parse_dual(c.dual);
  const Rational D = parse_rational(c.D);
  if (D <= 1) fail(ErrorKind::usage, "--D must exceed 1");
  if (c.N < 1) fail(ErrorKind::usage, "--N must be positive");
  WitnessOptions options;
  options.p = parse_p(c.p, 2.0);
  if (options.p < 1 || options.p > 2) fail(ErrorKind::usage, "--p must lie in [1, 2]");
  options.quadrature = QuadratureConfig{c.nodes, c.tolerance, parse_scheme(c.scheme)};
  options.quadrature.validate();
  options.threads = c.threads;
  const bool su2 = dynamic_cast<const Su2Dual*>(hg.get()) != nullptr;
  const auto u = hg->universe();
  std::string strategy = c.strategy;
  if (strategy.empty()) {
    strategy = su2 ? "interval" : (u && u->size() <= kExhaustiveCap) ? "exhaustive" : "greedy";
  }
  options.strategy = parse_strategy(strategy);
  if (c.max_size) {
    options.greedy.max_size = c.max_size;
    options.exhaustive_cap = c.max_size;
  }
  const LabelSet K0 = c.K.empty() ? LabelSet{hg->identity()} : parse_label_list(*hg, c.K);
  const WitnessSequence w = build_witness(hg, K0, D, c.N, options);
  const BlowupReport report = blowup_report(w, options.p);
  const MultiplierCheck check = check_multiplier_bounded(w);
  Output o;
  const std::string format = format_of(c);
  if (format == "csv") {
    o.body = blowup_csv(report);
  } else if (format == "pretty") {
    o.body = blowup_pretty(report, check);
  } else if (format == "json") {
    o.body = blowup_json(w, report, check, ReportOptions{!c.no_timestamp});
  } else {
    format_unsupported(format, "witness");
  }
  o.summary = fmt::format("growth factor {} (certified {}), chain law {}, max a_value {} <= {}: {}",
                          format_double(report.growth_factor),
                          format_double(report.certified_growth),
                          check.products_ok ? "exact" : "fails", format_double(check.max_a_value),
                          format_double(check.limit), check.bound_ok ? "yes" : "no");
  if (!check.ok() || !report.lower_bound_law) o.status = exit_code(ErrorKind::internal_invariant);
  return o;
}

void report_error(std::ostream& err, ErrorKind kind, const std::string& message,
                  const std::string& location = {}, std::optional<double> residual = {}) {
  ordered_json e;
  e["category"] = std::string(to_string(kind));
  e["message"] = message;
  e["exit_code"] = exit_code(kind);
  if (!location.empty()) e["location"] = location;
  if (residual) e["residual"] = *residual;
  ordered_json doc;
  doc["error"] = std::move(e);
  err << doc.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in duals of compact groups", "fusionhg"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--dual", c.dual, "su2 | s3 | q8 | klein4 | z<n> | table or product file | a*b")
        ->capture_default_str();
    sub->add_option("--out", c.out, "write the report here instead of stdout");
    sub->add_option("--format", c.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--threads", c.threads, "worker threads (default: FUSIONHG_THREADS or all cores)");
    sub->add_flag("--no-timestamp", c.no_timestamp, "omit the generated_at field");
  };
  auto quadrature = [&](CLI::App* sub) {
    sub->add_option("--nodes", c.nodes, "minimum quadrature cells")->capture_default_str();
    sub->add_option("--tolerance", c.tolerance, "absolute quadrature tolerance")->capture_default_str();
    sub->add_option("--scheme", c.scheme, "gauss-legendre | adaptive-simpson")->capture_default_str();
  };

  auto* axioms = app.add_subcommand("axioms", "check the hypergroup axioms exactly on a sample");
  common(axioms);
  axioms->add_option("--max-ell", c.max_ell, "SU(2) sample bound on l")->capture_default_str();

  auto* haar_cmd = app.add_subcommand("haar", "list Haar masses");
  common(haar_cmd);
  haar_cmd->add_option("--max-ell", c.max_ell, "SU(2) bound on l")->capture_default_str();
  haar_cmd->add_option("--x", c.x, "labels to list instead of the default range");

  auto* conv = app.add_subcommand("convolve", "fuse two points or convolve two functions");
  common(conv);
  conv->add_option("--x", c.x, "first point");
  conv->add_option("--y", c.y, "second point");
  conv->add_option("--f", c.f, "label:value,... for the weighted convolution");
  conv->add_option("--g", c.g, "label:value,...");

  auto* leptin = app.add_subcommand("leptin", "search a Leptin set or verify a certificate");
  common(leptin);
  leptin->add_option("--K", c.K, "labels of K; for the interval strategy the radius k");
  leptin->add_option("--epsilon", c.epsilon, "rational or decimal, converted exactly");
  leptin->add_option("--strategy", c.strategy, "interval | greedy | exhaustive | product");
  leptin->add_option("--max-size", c.max_size, "greedy size limit or exhaustive universe cap");
  leptin->add_option("--verify", c.verify, "certificate file to recompute");

  auto* bump_cmd = app.add_subcommand("bump", "build and certify a bump function");
  common(bump_cmd);
  quadrature(bump_cmd);
  bump_cmd->add_option("--K", c.K, "labels of K");
  bump_cmd->add_option("--V", c.V, "labels of V");

  auto* norms = app.add_subcommand("norms", "l^p(h), A and central Segal norms of a function");
  common(norms);
  quadrature(norms);
  norms->add_option("--f", c.f, "label:value,...");
  norms->add_option("--p", c.p, "exponent >= 1 or inf (default 1)");

  auto* witness = app.add_subcommand("witness", "build the nested bump sequence and its blowup report");
  common(witness);
  quadrature(witness);
  witness->add_option("--D", c.D, "A-norm cap > 1")->capture_default_str();
  witness->add_option("--N", c.N, "number of stages")->capture_default_str();
  witness->add_option("--p", c.p, "Segal exponent in [1, 2] (default 2)");
  witness->add_option("--K", c.K, "initial K (default: the identity)");
  witness->add_option("--strategy", c.strategy, "interval | greedy | exhaustive");
  witness->add_option("--max-size", c.max_size, "greedy size limit or exhaustive universe cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, ErrorKind::usage, e.what());
    return exit_code(ErrorKind::usage);
  }

  try {
    Output o;
    if (axioms->parsed()) {
      o = cmd_axioms(c);
    } else if (haar_cmd->parsed()) {
      o = cmd_haar(c);
    } else if (conv->parsed()) {
      o = cmd_convolve(c);
    } else if (leptin->parsed()) {
      o = cmd_leptin(c);
    } else if (bump_cmd->parsed()) {
      o = cmd_bump(c);
    } else if (norms->parsed()) {
      o = cmd_norms(c);
    } else {
      o = cmd_witness(c);
    }
    if (c.out.empty()) {
      out << o.body;
    } else {
      std::ofstream file(c.out, std::ios::binary);
      if (!file) fail(ErrorKind::usage, "cannot write '" + c.out + "'");
      file << o.body;
      out << "wrote " << c.out;
      if (!o.summary.empty()) out << ": " << o.summary;
      out << "\n";
    }
    return o.status;
  } catch (const InvalidTableError& e) {
    report_error(err, e.kind(), e.what(), e.location());
    return exit_code(e.kind());
  } catch (const NumericError& e) {
    report_error(err, e.kind(), e.what(), {}, e.residual());
    return exit_code(e.kind());
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error(err, ErrorKind::internal_invariant, e.what());
    return exit_code(ErrorKind::internal_invariant);
  }
}

}  // namespace fusionhg::cli
