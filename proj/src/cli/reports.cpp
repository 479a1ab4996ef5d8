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

#include <chrono>
#include <cmath>

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "fusionhg/cli.hpp"
#include "fusionhg/error.hpp"

namespace fusionhg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json label_array(const Hypergroup& hg, const LabelSet& set) {
  ordered_json a = ordered_json::array();
  for (const Label& x : set) a.push_back(hg.format_label(x));
  return a;
}

ordered_json optional_double(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

void stamp(ordered_json& doc, const ReportOptions& options) {
  if (!options.timestamp) return;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  doc["generated_at"] = fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

std::string certificate_json(const Hypergroup& hg, const LeptinCertificate& cert, bool verified,
                             const ReportOptions& options) {
  ordered_json doc;
  doc["strategy"] = std::string(to_string(cert.strategy));
  doc["dual"] = hg.name();
  doc["K"] = label_array(hg, cert.K);
  doc["V"] = label_array(hg, cert.V);
  doc["ratio"] = to_string(cert.ratio);
  doc["epsilon"] = to_string(cert.epsilon);
  doc["verified"] = verified;
  stamp(doc, options);
  return doc.dump(2) + "\n";
}

ParsedCertificate parse_certificate(const Hypergroup& hg, std::string_view text) {
  auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) fail(ErrorKind::usage, "certificate is not a JSON object");
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!doc.contains(key)) fail(ErrorKind::usage, std::string("certificate lacks '") + key + "'");
    return doc[key];
  };
  auto labels = [&](const char* key) {
    LabelSet s;
    const auto& a = need(key);
    if (!a.is_array()) fail(ErrorKind::usage, std::string("certificate field '") + key + "' is not an array");
    for (const auto& item : a) s.insert(hg.parse_label(item.get<std::string>()));
    return s;
  };
  ParsedCertificate p;
  p.cert.strategy = parse_strategy(need("strategy").get<std::string>());
  p.cert.K = labels("K");
  p.cert.V = labels("V");
  p.cert.ratio = parse_rational(need("ratio").get<std::string>());
  p.cert.epsilon = parse_rational(need("epsilon").get<std::string>());
  p.claimed_verified = doc.value("verified", false);
  return p;
}

std::string blowup_csv(const BlowupReport& report) {
  std::string out = "n,K_size,V_size,ratio,a_bound,a_value,segal_p,lower_bound\n";
  for (const auto& row : report.rows) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", row.n, row.K_size, row.V_size,
                       to_string(row.ratio), format_double(row.a_bound),
                       row.a_value ? format_double(*row.a_value) : "", format_double(row.segal_p),
                       format_double(row.lower_bound));
  }
  return out;
}

std::string blowup_json(const WitnessSequence& w, const BlowupReport& report,
                        const MultiplierCheck& check, const ReportOptions& options) {
  ordered_json doc;
  doc["dual"] = w.hg->name();
  doc["D"] = to_string(w.D);
  doc["p"] = report.p;
  doc["N"] = report.rows.size();
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["n"] = row.n;
    r["K_size"] = row.K_size;
    r["V_size"] = row.V_size;
    r["ratio"] = to_string(row.ratio);
    r["a_bound"] = row.a_bound;
    r["a_value"] = optional_double(row.a_value);
    r["segal_p"] = row.segal_p;
    r["lower_bound"] = row.lower_bound;
    r["haar_K"] = to_string(row.haar_K);
    r["lower_bound_holds"] = row.lower_bound_holds;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["growth_factor"] = report.growth_factor;
  doc["certified_growth"] = report.certified_growth;
  doc["lower_bound_law"] = report.lower_bound_law;
  ordered_json mc;
  mc["products_ok"] = check.products_ok;
  mc["product_failures"] = check.product_failures;
  mc["bound_ok"] = check.bound_ok;
  mc["max_a_value"] = check.max_a_value;
  mc["limit"] = check.limit;
  doc["multiplier_check"] = std::move(mc);
  stamp(doc, options);
  return doc.dump(2) + "\n";
}

std::string blowup_pretty(const BlowupReport& report, const MultiplierCheck& check) {
  std::string out = fmt::format("{:>3} {:>8} {:>8} {:>12} {:>12} {:>14} {:>14}\n", "n", "|K|",
                                "|V|", "a_bound", "a_value", "segal_p", "lower_bound");
  for (const auto& row : report.rows) {
    out += fmt::format("{:>3} {:>8} {:>8} {:>12.9f} {:>12} {:>14.6g} {:>14.6g}\n", row.n,
                       row.K_size, row.V_size, row.a_bound,
                       row.a_value ? fmt::format("{:.9f}", *row.a_value) : "-", row.segal_p,
                       row.lower_bound);
  }
  out += fmt::format("growth factor {:.6g} (certified {:.6g}), lower-bound law {}\n",
                     report.growth_factor, report.certified_growth,
                     report.lower_bound_law ? "holds" : "FAILS");
  out += fmt::format("chain law {}, max a_value {:.9f} <= {:.9f}: {}\n",
                     check.products_ok ? "exact" : "FAILS", check.max_a_value, check.limit,
                     check.bound_ok ? "yes" : "no");
  return out;
}

}  // namespace fusionhg::cli
