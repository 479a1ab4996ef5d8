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

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fusionhg/cli.hpp"
#include "fusionhg/error.hpp"

namespace fusionhg::cli {

namespace {

using nlohmann::json;

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidTableError(std::string("missing field '") + key + "'", where);
  return *it;
}

std::int64_t positive_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) {
    throw InvalidTableError("expected a positive integer, got " + v.dump(), where);
  }
  return v.get<std::int64_t>();
}

// Returns false when the entry is a float.
bool scalar(const json& v, const std::string& where, Rational& exact, double& approx) {
  if (v.is_number_integer()) {
    exact = Rational(v.get<long>());
    approx = to_double(exact);
    return true;
  }
  if (v.is_number_float()) {
    approx = v.get<double>();
    return false;
  }
  if (v.is_string()) {
    try {
      exact = parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      throw InvalidTableError(e.what(), where);
    }
    approx = to_double(exact);
    return true;
  }
  throw InvalidTableError("expected a number or a \"p/q\" string, got " + v.dump(), where);
}

}  // namespace

CharacterTable parse_table(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw InvalidTableError(msg, source + ": " + position_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw InvalidTableError("expected an object at the top level", source);

  CharacterTable t;
  t.name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>()
                                                           : source;
  t.group_order = positive_integer(field(doc, "group_order", source), "group_order");
  const json& classes = field(doc, "classes", source);
  if (!classes.is_array() || classes.empty()) {
    throw InvalidTableError("expected a nonempty array of class sizes", "classes");
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    t.class_sizes.push_back(positive_integer(classes[c], "classes[" + std::to_string(c) + "]"));
  }
  const json& irreps = field(doc, "irreps", source);
  if (!irreps.is_array() || irreps.empty()) {
    throw InvalidTableError("expected a nonempty array of irreps", "irreps");
  }
  bool exact = true;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const std::string where = "irreps[" + std::to_string(i) + "]";
    const json& row = irreps[i];
    if (!row.is_object()) throw InvalidTableError("expected an object", where);
    CharacterTable::Irrep irrep;
    irrep.name = row.contains("name") && row["name"].is_string() ? row["name"].get<std::string>()
                                                                 : "chi" + std::to_string(i);
    irrep.dim = positive_integer(field(row, "dim", where), where + ".dim");
    const json& values = field(row, "values", where);
    if (!values.is_array()) throw InvalidTableError("expected an array", where + ".values");
    for (std::size_t c = 0; c < values.size(); ++c) {
      const std::string at = where + ".values[" + std::to_string(c) + "]";
      const json& pair = values[c];
      if (!pair.is_array() || pair.size() != 2) {
        throw InvalidTableError("expected a [re, im] pair, got " + pair.dump(), at);
      }
      Rational re, im;
      double re_f = 0, im_f = 0;
      const bool re_exact = scalar(pair[0], at + "[0]", re, re_f);
      const bool im_exact = scalar(pair[1], at + "[1]", im, im_f);
      exact = exact && re_exact && im_exact;
      irrep.values.emplace_back(re_f, im_f);
      irrep.exact_values.emplace_back(re, im);
    }
    t.irreps.push_back(std::move(irrep));
  }
  if (!exact) {
    for (auto& irrep : t.irreps) irrep.exact_values.clear();
  }
  t.validate();
  return t;
}

CharacterTable ingest_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidTableError("cannot open file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str(), path.string());
}

}  // namespace fusionhg::cli
