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

#ifndef FUSIONHG_CLI_HPP_
#define FUSIONHG_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fusionhg/character_table.hpp"
#include "fusionhg/hypergroup.hpp"
#include "fusionhg/leptin.hpp"
#include "fusionhg/segal.hpp"

namespace fusionhg::cli {

// Character table document:
//   {"name": "S3", "group_order": 6, "classes": [1, 3, 2],
//    "irreps": [{"name": "rho", "dim": 2, "values": [[2, 0], [0, 0], [-1, 0]]}, ...]}
// Entries of "values" are [re, im] pairs. Integers and "p/q" strings are
// exact; any float puts the whole table in the float lane. Throws
// InvalidTableError with a line/column or field location.
CharacterTable parse_table(std::string_view text, const std::string& source = "<table>");
CharacterTable ingest_table(const std::filesystem::path& path);

// su2 | s3 | q8 | klein4 | z<n> | path to a table or product document | a*b.
// A product document is {"product": [spec, ...]} with paths relative to it.
HypergroupPtr parse_dual(std::string_view spec);

// Comma-separated labels; parentheses group product components.
LabelSet parse_label_list(const Hypergroup& hg, std::string_view text);
// "label:value,label:value" with exact values.
ExactFunction parse_function(const Hypergroup& hg, std::string_view text);

std::string format_double(double value);

struct ReportOptions {
  bool timestamp = true;
};

// {strategy, dual, K, V, ratio, epsilon, verified}.
std::string certificate_json(const Hypergroup& hg, const LeptinCertificate& cert, bool verified,
                             const ReportOptions& options);
// Parses a certificate document and recomputes it against `hg`.
struct ParsedCertificate {
  LeptinCertificate cert;
  bool claimed_verified = false;
};
ParsedCertificate parse_certificate(const Hypergroup& hg, std::string_view text);

std::string blowup_csv(const BlowupReport& report);
std::string blowup_json(const WitnessSequence& w, const BlowupReport& report,
                        const MultiplierCheck& check, const ReportOptions& options);
std::string blowup_pretty(const BlowupReport& report, const MultiplierCheck& check);

// Entry point of the command-line tool; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusionhg::cli

#endif  // FUSIONHG_CLI_HPP_
