/*
 * Copyright 2026 The parabetti Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "parabetti/cli.hpp"
#include "support/tables.hpp"

using namespace parabetti;
using namespace parabetti::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "parabetti");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("parabetti_test_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

std::string document_for(const tables::Column& col, long d) {
  return emit_document(from_instance(tables::instance(col, d)));
}

const tables::Column& column(const std::vector<tables::Column>& cols, const std::string& name, int g) {
  for (const auto& c : cols)
    if (c.name == name && c.genus == g) return c;
  throw std::runtime_error("no column " + name);
}

const char* kCaseA = R"({"genus": 2, "degree": 1, "points": [{"weights": ["0", "1/3"], "multiplicities": [1, 1]}]})";

}  // namespace

TEST_CASE("compute emits the Betti numbers") {
  auto path = write_temp("case_a", kCaseA);
  Run r = run_args({"compute", path, "--method", "closed"});
  CHECK(r.code == kOk);
  BettiResult res = parse_result(r.out);
  CHECK(res.betti == std::vector<long>{1, 0, 2, 4, 2, 4, 2, 0, 1});
  CHECK(res.dim == 4);

  Run csv = run_args({"compute", path, "--format", "csv"});
  CHECK(csv.out == "dim,empty,b0,b1,b2,b3,b4,b5,b6,b7,b8\n4,false,1,0,2,4,2,4,2,0,1\n");
  Run text = run_args({"compute", path, "--format", "text", "--method", "rank2"});
  CHECK(text.out.find("betti: 1 0 2 4 2 4 2 0 1") != std::string::npos);
  Run latex = run_args({"compute", path, "--format", "latex"});
  CHECK(latex.out.find("$\\beta_{4}$ & 2") != std::string::npos);
}

TEST_CASE("rank one is a point") {
  auto path = write_temp("rank1", R"({"genus": 3, "degree": 4, "points": [{"weights": ["0"], "multiplicities": [1]}]})");
  Run r = run_args({"compute", path});
  CHECK(r.code == kOk);
  CHECK(parse_result(r.out).betti == std::vector<long>{1});
}

TEST_CASE("exit codes") {
  auto triv = write_temp("trivial", R"({"genus": 2, "degree": 0, "points": [{"weights": ["0"], "multiplicities": [2]}]})");
  CHECK(run_args({"compute", triv}).code == kStrictSemistable);
  CHECK(run_args({"compute", triv, "--force"}).code == kCrossCheck);
  auto dec = write_temp("decimal", R"({"genus": 2, "degree": 0, "points": [{"weights": ["0", "0.333"], "multiplicities": [1, 1]}]})");
  Run d = run_args({"compute", dec});
  CHECK(d.code == kInvalidInput);
  CHECK(d.err.find("points[0].weights[1]") != std::string::npos);
  auto bad = write_temp("malformed", "{\"genus\": 2,\n \"degree\": }");
  Run b = run_args({"compute", bad});
  CHECK(b.code == kInvalidInput);
  CHECK(b.err.find("line 2") != std::string::npos);
  CHECK(run_args({"compute", "/nonexistent/doc.json"}).code == kInvalidInput);
  CHECK(run_args({"compute", write_temp("case_a", kCaseA), "--method", "nope"}).code == kInvalidInput);
  CHECK(run_args({"compute", write_temp("case_a", kCaseA), "--format", "yaml"}).code == kInvalidInput);
  CHECK(run_args({"compute", write_temp("case_a", kCaseA), "--method", "recursion", "--truncation", "4"}).code ==
        kCrossCheck);
  CHECK(run_args({}).code == kInvalidInput);
  CHECK(run_args({"--help"}).code == kOk);
  auto rank3 = write_temp("rank3", R"({"genus": 1, "degree": 0, "points": [{"weights": ["0", "1/12", "1/4"], "multiplicities": [1, 1, 1]}]})");
  CHECK(run_args({"compute", rank3, "--method", "rank2"}).code == kInvalidInput);
}

TEST_CASE("document validation names the field") {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    CAPTURE(text);
    try {
      parse_document(text);
      FAIL("accepted");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error(R"({"degree": 0, "points": []})", "genus");
  expect_error(R"({"genus": 1.5, "degree": 0, "points": [{"weights": ["0"], "multiplicities": [1]}]})", "genus");
  expect_error(R"({"genus": 1, "degree": 0, "points": []})", "points");
  expect_error(R"({"genus": 1, "degree": 0, "points": [{"weights": [0], "multiplicities": [1]}]})",
               "points[0].weights[0]");
  expect_error(R"({"genus": 1, "degree": 0, "points": [{"weights": ["0"], "multiplicities": [-1]}]})",
               "points[0].multiplicities[0]");
  expect_error(R"({"genus": 1, "degree": 0, "points": [{"weights": ["1/2", "0"], "multiplicities": [1, 1]}]})",
               "points");
  expect_error(R"({"genus": 1, "degree": 0, "extra": 1, "points": [{"weights": ["0"], "multiplicities": [1]}]})",
               "extra");
  expect_error(R"({"genus": 1, "degree": 0, "points": [{"weights": ["0"], "multiplicities": [1]}],
                   "options": {"method": "fast"}})",
               "options.method");
}

TEST_CASE("documents round trip") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    InstanceDocument doc;
    doc.genus = static_cast<int>(rng() % 5);
    doc.degree = static_cast<long>(rng() % 11) - 5;
    const int n = 1 + static_cast<int>(rng() % 4);
    const int npts = 1 + static_cast<int>(rng() % 3);
    for (int p = 0; p < npts; ++p) {
      PointDoc pt;
      const int len = 1 + static_cast<int>(rng() % 3);
      // Weights: increasing numerators over a common denominator.
      const long den = 20 + static_cast<long>(rng() % 17);
      long num = static_cast<long>(rng() % 3);
      int left = n;
      for (int i = 0; i < len; ++i) {
        pt.weights.push_back(make_rational(num, den));
        num += 1 + static_cast<long>(rng() % 4);
        int m = i + 1 == len ? left : static_cast<int>(rng() % (left + 1));
        pt.multiplicities.push_back(m);
        left -= m;
      }
      doc.points.push_back(pt);
    }
    if (trial % 3 == 0) doc.options.method = "recursion";
    if (trial % 5 == 0) doc.options.truncation = 30;
    doc.options.force = trial % 2;
    std::string text = emit_document(doc);
    CHECK(parse_document(text) == doc);
    CHECK(emit_document(parse_document(text)) == text);
  }
}

TEST_CASE("result documents round trip") {
  auto path = write_temp("case_a", kCaseA);
  for (const char* m : {"closed", "qclosed", "recursion", "rank2"}) {
    Run r = run_args({"compute", path, "--method", m});
    BettiResult res = parse_result(r.out);
    CHECK(method_name(res.method) == m);
    CHECK(emit_result(res, Format::Json) == r.out);
    CHECK(res.poly == LaurentPoly::from_ints(0, {1, 0, 2, 4, 2, 4, 2, 0, 1}));
  }
}

TEST_CASE("output is byte-stable") {
  auto path = write_temp("case_a", kCaseA);
  for (const char* f : {"json", "csv", "latex", "text"})
    CHECK(run_args({"compute", path, "--format", f}).out == run_args({"compute", path, "--format", f}).out);
  CHECK(run_args({"sweep", path, "--genus-range", "0..2"}).out == run_args({"sweep", path, "--genus-range", "0..2"}).out);
  CHECK(run_args({"compute", path, "--timing"}).out.find("seconds") != std::string::npos);
}

TEST_CASE("compare") {
  SUBCASE("four points of rank two, genus one") {
    auto path = write_temp("case_f", document_for(column(tables::rank2_columns(), "rank2 F", 1), 0));
    Run r = run_args({"compare", path});
    CHECK(r.code == kOk);
    CHECK(r.out.find("verdict: AGREE (4 methods)") != std::string::npos);
  }
  SUBCASE("rank three, two points, genus one") {
    auto path = write_temp("r3b", document_for(column(tables::rank3_columns(), "rank3 B", 1), 0));
    Run r = run_args({"compare", path});
    CHECK(r.code == kOk);
    CHECK(r.out.find("closed: 1 0 5 2 12 6 16\n") != std::string::npos);
    CHECK(r.out.find("verdict: AGREE (3 methods)") != std::string::npos);
  }
  SUBCASE("rank four, one point, genus one") {
    auto path = write_temp("r4a", document_for(column(tables::rank4_columns(), "rank4 A", 1), 0));
    Run r = run_args({"compare", path, "--format", "json"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("\"AGREE\"") != std::string::npos);
  }
}

TEST_CASE("sweep") {
  auto path = write_temp("case_a", kCaseA);
  Run r = run_args({"sweep", path, "--genus-range", "0..3", "--degree-range", "0..0"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("$\\beta_{0}$ & 0 & 1 & 1 & 1 \\\\") != std::string::npos);
  CHECK(r.out.find("$\\beta_{7}$ & - & - & - & 12 \\\\") != std::string::npos);
  Run csv = run_args({"sweep", path, "--genus-range", "0..1", "--format", "csv"});
  CHECK(csv.out == "genus,degree,dim,empty,b0,b1,error\n0,1,-2,true,0,,\n1,1,1,false,1,0,\n");
  CHECK(run_args({"sweep", path, "--genus-range", "3..1"}).code == kInvalidInput);

  // A cell that fails is annotated; the sweep still succeeds.
  auto triv = write_temp("trivial_sweep", R"({"genus": 1, "degree": 0, "points": [{"weights": ["0"], "multiplicities": [2]}]})");
  Run mixed = run_args({"sweep", triv, "--degree-range", "0..1"});
  CHECK(mixed.code == kOk);
  CHECK(mixed.out.find("% $^*$ g=1, d=0") != std::string::npos);
  Run all_bad = run_args({"sweep", triv, "--degree-range", "0..0"});
  CHECK(all_bad.code == kCrossCheck);
}

TEST_CASE("check") {
  Run a = run_args({"check", write_temp("case_a", kCaseA)});
  CHECK(a.out.find("ss=stable: TRUE") != std::string::npos);
  CHECK(a.out.find("dim: 4") != std::string::npos);
  auto triv = write_temp("trivial", R"({"genus": 2, "degree": 0, "points": [{"weights": ["0"], "multiplicities": [2]}]})");
  Run t = run_args({"check", triv});
  CHECK(t.code == kOk);
  CHECK(t.out.find("ss=stable: FALSE") != std::string::npos);
  CHECK(t.out.find("witness: sub-data rank 1, multiplicities (1), degree 0") != std::string::npos);
  auto g0 = write_temp("g0", R"({"genus": 0, "degree": 0, "points": [{"weights": ["0", "1/3"], "multiplicities": [1, 1]}]})");
  CHECK(run_args({"check", g0}).out.find("exists stable: FALSE") != std::string::npos);
  for (long d = 0; d < 4; ++d) {
    auto p = write_temp("third", emit_document(from_instance(tables::instance(tables::rank2_columns()[0], d))));
    CHECK(run_args({"check", p}).out.find("ss=stable: TRUE") != std::string::npos);
  }
}

TEST_CASE("ranges") {
  CHECK(parse_range("0..3") == std::pair<long, long>{0, 3});
  CHECK(parse_range("-2..1") == std::pair<long, long>{-2, 1});
  CHECK(parse_range("5") == std::pair<long, long>{5, 5});
  CHECK_THROWS_AS(parse_range("a..b"), InputError);
  CHECK_THROWS_AS(parse_range("1..x"), InputError);
}
