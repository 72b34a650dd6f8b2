// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "gencirc/errors.hpp"
#include "gencirc/io.hpp"

namespace gencirc {
namespace {

using nlohmann::json;

std::string data(const char* name) { return std::string(GENCIRC_TEST_DATA) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::set<std::vector<std::string>> circuit_sets(const json& circuits) {
  std::set<std::vector<std::string>> out;
  for (const auto& d : circuits["degrees"])
    for (const auto& c : d["circuits"]) out.insert(c.get<std::vector<std::string>>());
  return out;
}

TEST(Cli, CircuitsOfPairExample) {
  auto r = run({"circuits", data("pair_plus.ideal"), "--trunc", "2", "--no-timestamp"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_EQ(circuit_sets(d["result"]["circuits"]),
            (std::set<std::vector<std::string>>{{"x", "y"}, {"x^2"}, {"x*y"}, {"y^2"}}));
  EXPECT_EQ(d["config"]["trunc"], 2);
  EXPECT_FALSE(d.contains("timestamp"));
}

TEST(Cli, StabWithEqualWeights) {
  auto r = run({"stab", data("principal.ideal"), "--weight", "1,1", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto d = r.doc();
  EXPECT_TRUE(d["result"]["pass"].get<bool>());
  EXPECT_EQ(d["result"]["note"], "B_ω trivial");
  EXPECT_EQ(d["config"]["seed"], 3);
  EXPECT_TRUE(d.contains("timestamp"));
}

TEST(Cli, StabNegativeControlReportsWitness) {
  auto r = run({"stab", data("y.ideal"), "--weight", "1,0", "--identity-g", "--no-timestamp"});
  ASSERT_EQ(r.code, 0);
  auto d = r.doc();
  EXPECT_FALSE(d["result"]["pass"].get<bool>());
  EXPECT_TRUE(d["result"]["g_trials"][0]["b_trials"][0].contains("witness"));
}

TEST(Cli, GroebnerBasisLex) {
  auto r = run({"gb", data("linear.ideal"), "--order", "lex", "--no-timestamp"});
  ASSERT_EQ(r.code, 0);
  auto elems = r.doc()["result"]["basis"]["elements"].get<std::vector<std::string>>();
  EXPECT_EQ(std::set<std::string>(elems.begin(), elems.end()), (std::set<std::string>{"x", "y"}));
  EXPECT_TRUE(r.doc()["result"]["basis"]["reduced"].get<bool>());
}

TEST(Cli, EmittedPolynomialsReparse) {
  auto ideal = read_ideal_file(data("cubics.ideal"));
  auto r = run({"gb", data("cubics.ideal"), "--weight", "3,1,2", "--tie", "lex", "--no-timestamp"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto gb = ideal.groebner_basis(MonomialOrder::parse("w:3,1,2;tie=lex"));
  auto elems = r.doc()["result"]["basis"]["elements"].get<std::vector<std::string>>();
  ASSERT_EQ(elems.size(), gb.elements.size());
  for (std::size_t i = 0; i < elems.size(); ++i) EXPECT_EQ(Polynomial::parse(ideal.ring(), elems[i]), gb.elements[i]);
}

TEST(Cli, DeterministicOutput) {
  std::vector<std::string> args{"gcs", data("binomial.ideal"), "--trunc", "3", "--seed", "11", "--no-timestamp"};
  auto a = run(args);
  auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> stab{"stab", data("cubics.ideal"), "--weight", "2,1,0", "--seed", "5", "--no-timestamp"};
  EXPECT_EQ(run(stab).out, run(stab).out);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv(cli::kSeedEnv, "424242", 1);
  auto r = run({"gcs", data("x.ideal"), "--trunc", "1", "--no-timestamp"});
  ::unsetenv(cli::kSeedEnv);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.doc()["config"]["seed"], 424242);
  EXPECT_EQ(r.doc()["config"]["seed_source"], "env");
  auto d = run({"gcs", data("x.ideal"), "--trunc", "1", "--no-timestamp"});
  EXPECT_EQ(d.doc()["config"]["seed_source"], "default");
}

TEST(Cli, MalformedInputExitsOne) {
  EXPECT_EQ(run({"gb", data("missing.ideal")}).code, 1);
  EXPECT_EQ(run({"gb", data("inhomogeneous.ideal")}).code, 1);
  EXPECT_EQ(run({"inw", data("linear.ideal"), "--weight", "1,x"}).code, 1);
  EXPECT_EQ(run({"gb", data("linear.ideal"), "--order", "lex", "--weight", "1,0"}).code, 1);
  EXPECT_EQ(run({"circuits", data("linear.ideal")}).code, 1);
  EXPECT_EQ(run({"frobnicate", data("linear.ideal")}).code, 1);
  auto r = run({"gb", data("inhomogeneous.ideal"), "--no-timestamp"});
  EXPECT_EQ(r.doc()["error"]["reason"], "malformed-input");
}

TEST(Cli, CertificationFailuresExitTwo) {
  auto lex = run({"lexseg", data("cubics.ideal"), "--no-timestamp"});
  EXPECT_EQ(lex.code, 2);
  EXPECT_EQ(lex.doc()["error"]["reason"], "lexseg-cap");
  auto enough = run({"lexseg", data("cubics.ideal"), "--lexcap", "14", "--no-timestamp"});
  EXPECT_EQ(enough.code, 0) << enough.out;
  auto capped = run({"circuits", data("pair_plus.ideal"), "--trunc", "2", "--cap", "1", "--no-timestamp"});
  EXPECT_EQ(capped.code, 2);
  EXPECT_EQ(capped.doc()["error"]["reason"], "enumeration-truncated");
  bool saw_uncertified = false;
  for (int seed = 0; seed < 40 && !saw_uncertified; ++seed) {
    auto g = run({"gcs", data("x_gf2.ideal"), "--trunc", "2", "--retries", "1", "--seed", std::to_string(seed),
                  "--no-timestamp"});
    if (g.code == 2) {
      saw_uncertified = true;
      EXPECT_EQ(g.doc()["error"]["reason"], "uncertified");
    }
  }
  EXPECT_TRUE(saw_uncertified);
}

TEST(Cli, FieldOverride) {
  auto r = run({"gb", data("pair_minus.ideal"), "--field", "gf:2", "--no-timestamp"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.doc()["result"]["ring"]["field"], "GF(2)");
  EXPECT_EQ(r.doc()["config"]["field"], "gf:2");
  auto plus = run({"gb", data("pair_plus.ideal"), "--field", "gf:2", "--no-timestamp"});
  EXPECT_EQ(r.doc()["result"]["basis"], plus.doc()["result"]["basis"]);
}

TEST(Cli, OtherCommands) {
  auto fan = run({"fan-enum", data("principal.ideal"), "--box", "3", "--no-timestamp"});
  ASSERT_EQ(fan.code, 0);
  EXPECT_EQ(fan.doc()["result"]["fan"]["cells"].size(), 3u);
  auto cell = run({"fan-cell", data("principal.ideal"), "--weight", "2,1", "--no-timestamp"});
  EXPECT_EQ(cell.doc()["result"]["cone"]["inequalities"], json::parse("[[1,-1]]"));
  auto cmp = run({"fan-compare", data("x.ideal"), "--other", data("y.ideal"), "--no-timestamp"});
  EXPECT_EQ(cmp.doc()["result"]["verdict"], "EQUAL-FAN-CERTIFIED");
  auto ugb = run({"ugb", data("binomial.ideal"), "--no-timestamp"});
  EXPECT_EQ(ugb.doc()["result"]["universal_basis"].size(), 4u);
  auto hf = run({"hf", data("binomial.ideal"), "--degree", "4", "--no-timestamp"});
  EXPECT_EQ(hf.doc()["result"]["hilbert"]["quotient_dims"], json::parse("[1,2,1,0,0]"));
  auto alpha = run({"alpha", data("principal.ideal"), "--weight", "1,0", "--degree", "2", "--no-timestamp"});
  EXPECT_EQ(alpha.doc()["result"]["alpha"]["values"], json::parse("[1,1]"));
  auto inw = run({"inw", data("principal.ideal"), "--weight", "1,2", "--no-timestamp"});
  EXPECT_EQ(inw.doc()["result"]["initial_ideal"], json::parse("[\"y^2\"]"));
  auto flat = run({"flatfam", data("cubics.ideal"), "--weight", "1,0,2", "--at", "5", "--no-timestamp"});
  ASSERT_EQ(flat.code, 0) << flat.out;
  for (const auto& s : flat.doc()["result"]["specializations"])
    for (const auto& [key, value] : s.items())
      if (key != "t") EXPECT_TRUE(value.get<bool>()) << key;
}

TEST(Cli, WritesOutputFile) {
  auto path = std::filesystem::temp_directory_path() / "gencirc_cli_test.json";
  auto r = run({"hf", data("x.ideal"), "-o", path.string(), "--no-timestamp"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["config"]["command"], "hf");
  std::filesystem::remove(path);
}

TEST(IdealFile, ParsesAndFormats) {
  auto ideal = parse_ideal("ring: GF(7)\nvars: a, b\ngens:  # trailing comment\n\n3*a^2 - b^2\na*b\n");
  EXPECT_EQ(ideal.ring()->field(), FieldSpec::prime(7));
  EXPECT_EQ(ideal.generators().size(), 2u);
  auto again = parse_ideal(format_ideal(ideal));
  EXPECT_EQ(again.generators(), ideal.generators());
  EXPECT_TRUE(ideal_equal(parse_ideal(format_ideal(ideal), FieldSpec::prime(7)), ideal));
}

TEST(IdealFile, Errors) {
  EXPECT_THROW(parse_ideal("vars: x\ngens:\nx\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring: Q\ngens:\nx\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring: Q; vars: x\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring: Q; vars: x; colour: red\ngens:\nx\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring: Q; vars: x,x\ngens:\nx\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring: Q; vars: x\ngens:\nx + 1\n"), ParseError);
  EXPECT_THROW(parse_ideal("ring: Q; vars: x\ngens:\nx +* 1\n"), ParseError);
}

}  // namespace
}  // namespace gencirc
