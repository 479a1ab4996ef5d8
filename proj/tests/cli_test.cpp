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

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fusionhg/cli.hpp"
#include "fusionhg/core.hpp"
#include "fusionhg/leptin.hpp"
#include "fusionhg/finite_dual.hpp"
#include "fusionhg/product_dual.hpp"
#include "fusionhg/su2_dual.hpp"
#include "oracles.hpp"

using namespace fusionhg;
namespace fs = std::filesystem;

namespace {

const fs::path kTables = fs::path(FUSIONHG_DATA_DIR) / "tables";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "fusionhg_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string location_of(std::string_view text) {
  try {
    cli::parse_table(text);
  } catch (const InvalidTableError& e) {
    return e.location();
  }
  return "accepted";
}

}  // namespace

TEST_CASE("bundled tables load and validate", "[cli][tables]") {
  const CharacterTable s3 = cli::ingest_table(kTables / "s3.json");
  CHECK(s3.irreps.size() == 3);
  CHECK(s3.exact());
  const CharacterTable q8 = cli::ingest_table(kTables / "q8.json");
  CHECK(q8.irreps.size() == 5);
  for (const char* name : {"z2.json", "z4.json"}) {
    const CharacterTable t = cli::ingest_table(kTables / name);
    const auto dual = finite_group_dual(t);
    for (const Label& x : oracle::universe(*dual)) CHECK(dual->haar(x) == 1);
  }
  // The file table and the built-in one define the same hypergroup.
  const auto from_file = finite_group_dual(s3);
  const auto builtin = finite_group_dual(symmetric3_table());
  for (const Label& x : oracle::universe(*builtin)) {
    for (const Label& y : oracle::universe(*builtin)) {
      REQUIRE(from_file->fuse(x, y) == builtin->fuse(x, y));
    }
  }
}

TEST_CASE("table parse errors carry a position", "[cli][tables]") {
  const std::string text = slurp(kTables / "s3.json");
  const std::string truncated = text.substr(0, text.size() / 2);
  const std::string loc = location_of(truncated);
  CHECK(loc.find("line") != std::string::npos);
  CHECK(loc.find("column") != std::string::npos);
  CHECK_THROWS_AS(cli::ingest_table(fs::path(FUSIONHG_DATA_DIR) / "no-such-file.json"),
                  InvalidTableError);
}

TEST_CASE("table field errors name the field", "[cli][tables]") {
  try {
    cli::parse_table(R"({"group_order": 2, "classes": [1, 1]})", "t.json");
    FAIL("expected a missing-field error");
  } catch (const InvalidTableError& e) {
    CHECK(e.location() == "t.json");
    CHECK(std::string(e.what()).find("missing field 'irreps'") != std::string::npos);
  }
  CHECK(location_of(R"({"group_order": 2, "classes": [1, 1], "irreps": [
      {"dim": 1, "values": [[1, 0], [1, 0]]},
      {"dim": 1, "values": [[1, 0], ["x", 0]]}]})") == "irreps[1].values[1][0]");
  // Sum of squared dimensions is 5, not 2.
  CHECK(location_of(R"({"group_order": 2, "classes": [1, 1], "irreps": [
      {"dim": 1, "values": [[1, 0], [1, 0]]},
      {"dim": 2, "values": [[2, 0], [-1, 0]]}]})") != "accepted");
  // Rows 0 and 1 coincide.
  try {
    cli::parse_table(R"({"group_order": 2, "classes": [1, 1], "irreps": [
        {"dim": 1, "values": [[1, 0], [1, 0]]},
        {"dim": 1, "values": [[1, 0], [1, 0]]}]})");
    FAIL("expected an orthogonality failure");
  } catch (const InvalidTableError& e) {
    CHECK(std::string(e.what()).find("rows 0 and 1") != std::string::npos);
  }
}

TEST_CASE("exact and float lanes", "[cli][tables]") {
  const CharacterTable exact = cli::parse_table(R"({"group_order": 2, "classes": [1, 1], "irreps": [
      {"dim": 1, "values": [[1, 0], ["2/2", 0]]},
      {"dim": 1, "values": [[1, 0], [-1, "0"]]}]})");
  CHECK(exact.exact());
  const CharacterTable real = cli::parse_table(R"({"group_order": 3, "classes": [1, 1, 1], "irreps": [
      {"dim": 1, "values": [[1, 0], [1, 0], [1, 0]]},
      {"dim": 1, "values": [[1, 0], [-0.5, 0.8660254037844386], [-0.5, -0.8660254037844386]]},
      {"dim": 1, "values": [[1, 0], [-0.5, -0.8660254037844386], [-0.5, 0.8660254037844386]]}]})");
  CHECK_FALSE(real.exact());
  const auto dual = finite_group_dual(real);
  CHECK(dual->involution(Label(1)) == Label(2));
  CHECK(check_axioms(*dual, oracle::universe(*dual)).ok());
}

TEST_CASE("dual specs", "[cli][dual]") {
  CHECK(cli::parse_dual("su2")->name() == "su2");
  CHECK(cli::parse_dual("s3")->universe()->size() == 3);
  CHECK(cli::parse_dual("q8")->universe()->size() == 5);
  CHECK(cli::parse_dual("klein4")->universe()->size() == 4);
  CHECK(cli::parse_dual("z6")->universe()->size() == 6);
  CHECK(cli::parse_dual((kTables / "q8.json").string())->universe()->size() == 5);
  const HypergroupPtr prod = cli::parse_dual((kTables / "s3_x_z4.json").string());
  REQUIRE(prod->universe());
  CHECK(prod->universe()->size() == 12);
  CHECK(check_axioms(*prod, oracle::universe(*prod)).ok());
  const HypergroupPtr mixed = cli::parse_dual("su2*s3");
  CHECK(dynamic_cast<const ProductDual*>(mixed.get()) != nullptr);
  CHECK(mixed->haar(mixed->parse_label("(1,rho)")) == 36);
  CHECK_THROWS_AS(cli::parse_dual("nonsense"), Error);
}

TEST_CASE("labels and functions", "[cli][dual]") {
  const auto su2 = su2_dual();
  CHECK(cli::parse_label_list(*su2, "0,1/2,1") == Su2Dual::ball(Spin::from_twice(2)));
  const ExactFunction f = cli::parse_function(*su2, "1/2:3/4,1:-2");
  CHECK(f(Label(1)) == Rational(3, 4));
  CHECK(f(Label(2)) == -2);
  CHECK(f.size() == 2);
  const auto sq = cli::parse_dual("s3*s3");
  CHECK(cli::parse_label_list(*sq, "(rho,triv),(sgn,sgn)") == LabelSet{Label{2, 0}, Label{1, 1}});
  CHECK_THROWS_AS(cli::parse_label_list(*su2, "1/3"), Error);
}

TEST_CASE("certificate JSON round-trip", "[cli][json]") {
  const auto su2 = su2_dual();
  const LeptinCertificate cert = leptin_search_interval(Spin::from_twice(2), Rational(1, 10));
  const std::string text = cli::certificate_json(*su2, cert, true, {false});
  const auto doc = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"strategy", "dual", "K", "V", "ratio", "epsilon", "verified"});
  CHECK(doc["ratio"] == to_string(cert.ratio));
  CHECK(doc["epsilon"] == "1/10");

  const cli::ParsedCertificate back = cli::parse_certificate(*su2, text);
  CHECK(back.claimed_verified);
  CHECK(back.cert.K == cert.K);
  CHECK(back.cert.V == cert.V);
  CHECK(back.cert.ratio == cert.ratio);
  CHECK(back.cert.epsilon == cert.epsilon);
  CHECK(back.cert.strategy == cert.strategy);
  CHECK(verify_certificate(*su2, back.cert));
  CHECK(cli::certificate_json(*su2, back.cert, true, {false}) == text);

  const auto stamped = nlohmann::json::parse(cli::certificate_json(*su2, cert, true, {true}));
  CHECK(stamped.contains("generated_at"));
}

TEST_CASE("haar command", "[cli][run]") {
  const Outcome r = run_cli({"haar", "--dual", "su2", "--max-ell", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "label,haar");
  for (int n = 0; n <= 6; ++n) {
    REQUIRE(std::getline(lines, line));
    CHECK(line.substr(line.find(',') + 1) == std::to_string((n + 1) * (n + 1)));
  }
  CHECK_FALSE(std::getline(lines, line));
}

TEST_CASE("leptin command and verification", "[cli][run]") {
  const fs::path cert = temp_path("cert.json");
  Outcome r = run_cli({"leptin", "--dual", "su2", "--K", "0.5", "--epsilon", "2", "--strategy",
                       "interval", "--no-timestamp", "--out", cert.string()});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(slurp(cert));
  CHECK(doc["ratio"] == "14/5");
  CHECK(doc["verified"] == true);

  r = run_cli({"leptin", "--dual", "su2", "--verify", cert.string()});
  CHECK(r.code == 0);
  auto tampered = doc;
  tampered["ratio"] = "30/14";
  const fs::path bad = temp_path("bad.json");
  std::ofstream(bad) << tampered.dump();
  r = run_cli({"leptin", "--dual", "su2", "--verify", bad.string()});
  CHECK(r.code == 1);

  r = run_cli({"leptin", "--dual", "s3", "--K", "rho", "--epsilon", "1/2", "--strategy",
               "exhaustive", "--no-timestamp"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ratio"] == "1");

  r = run_cli({"leptin", "--dual", "su2*su2", "--K", "(1/2,1/2)", "--epsilon", "3", "--strategy",
               "product", "--no-timestamp"});
  REQUIRE(r.code == 0);
  const auto product = nlohmann::json::parse(r.out);
  CHECK(product["strategy"] == "product");
  CHECK(product["verified"] == true);
}

TEST_CASE("deterministic reports", "[cli][run]") {
  const std::vector<std::string> args = {"witness", "--dual", "su2", "--D", "1.1", "--N", "3",
                                         "--no-timestamp"};
  const Outcome a = run_cli(args), b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK_FALSE(doc.contains("generated_at"));
}

TEST_CASE("witness CSV report", "[cli][run]") {
  const fs::path csv = temp_path("report.csv");
  const Outcome r = run_cli({"witness", "--dual", "su2", "--D", "1.1", "--N", "3", "--p", "2",
                             "--out", csv.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("wrote " + csv.string(), 0) == 0);
  std::istringstream lines(slurp(csv));
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,K_size,V_size,ratio,a_bound,a_value,segal_p,lower_bound");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("error categories and exit codes", "[cli][run]") {
  Outcome r = run_cli({});
  CHECK(r.code == 2);
  CHECK(nlohmann::json::parse(r.err)["error"]["category"] == "usage");

  r = run_cli({"haar", "--dual", (fs::path(FUSIONHG_SOURCE_TESTS) / "data" / "truncated.json").string()});
  CHECK(r.code == 4);
  const auto err = nlohmann::json::parse(r.err)["error"];
  CHECK(err["category"] == "invalid-table");
  CHECK(err["location"].get<std::string>().find("line") != std::string::npos);

  r = run_cli({"convolve", "--dual", "s3", "--x", "tau", "--y", "rho"});
  CHECK(r.code == 3);
  r = run_cli({"leptin", "--dual", "su2", "--K", "0,1/2", "--epsilon", "1", "--strategy", "exhaustive"});
  CHECK(r.code == 5);
  CHECK(nlohmann::json::parse(r.err)["error"]["category"] == "capacity");
  r = run_cli({"leptin", "--dual", "su2", "--K", "1/2", "--epsilon", "-1"});
  CHECK(r.code == 2);
  r = run_cli({"norms", "--dual", "su2", "--f", "0:1", "--p", "0.5"});
  CHECK(r.code == 2);
  r = run_cli({"norms", "--dual", "su2", "--f", "30:1", "--nodes", "1", "--tolerance", "1e-300"});
  CHECK(r.code == 6);
  CHECK(nlohmann::json::parse(r.err)["error"].contains("residual"));
}

TEST_CASE("axioms command", "[cli][run]") {
  Outcome r = run_cli({"axioms", "--dual", (kTables / "s3_x_z4.json").string(), "--no-timestamp"});
  CHECK(r.code == 0);
  r = run_cli({"axioms", "--dual", "su2", "--max-ell", "2", "--no-timestamp", "--format", "pretty"});
  CHECK(r.code == 0);
}
