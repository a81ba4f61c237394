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

#include "parabetti/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "parabetti/numeric_functions.hpp"
#include "parabetti/parallel.hpp"
#include "parabetti/rank2.hpp"

namespace parabetti::cli {

using json = nlohmann::ordered_json;

namespace {

std::string line_column(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

long get_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) fail(path + it.key(), "unknown field");
  }
}

PointDoc parse_point(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  reject_unknown(v, {"weights", "multiplicities"}, path + ".");
  PointDoc p;
  if (!v.contains("weights")) fail(path + ".weights", "missing");
  if (!v.contains("multiplicities")) fail(path + ".multiplicities", "missing");
  const json& w = v["weights"];
  const json& m = v["multiplicities"];
  if (!w.is_array()) fail(path + ".weights", "expected an array");
  if (!m.is_array()) fail(path + ".multiplicities", "expected an array");
  for (size_t i = 0; i < w.size(); ++i) {
    const std::string at = path + ".weights[" + std::to_string(i) + "]";
    if (!w[i].is_string()) fail(at, "weights are exact strings such as \"1/3\"");
    try {
      p.weights.push_back(parse_rational(w[i].get<std::string>()));
    } catch (const InvalidData& e) {
      fail(at, e.what());
    }
  }
  for (size_t i = 0; i < m.size(); ++i) {
    const std::string at = path + ".multiplicities[" + std::to_string(i) + "]";
    long x = get_integer(m[i], at);
    if (x < 0) fail(at, "multiplicities are non-negative");
    p.multiplicities.push_back(static_cast<int>(x));
  }
  return p;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot read file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json result_json(const BettiResult& r, std::optional<double> seconds) {
  json j;
  j["method"] = method_name(r.method);
  j["dim"] = r.dim;
  j["empty"] = r.empty;
  j["ss_eq_stable"] = r.ss_eq_stable;
  j["betti"] = r.betti;
  json poly = json::array();
  if (!r.poly.is_zero())
    for (int e = r.poly.low_degree(); e <= r.poly.high_degree(); ++e) {
      Rational c = r.poly.coeff(e);
      if (c != 0) poly.push_back(json::array({e, to_string(c)}));
    }
  j["polynomial"] = poly;
  if (seconds) j["seconds"] = *seconds;
  return j;
}

std::string latex_beta(long i) { return "$\\beta_{" + std::to_string(i) + "}$"; }

}  // namespace

InstanceDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed document at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail("document", "expected an object");
  reject_unknown(j, {"genus", "degree", "points", "options"}, "");
  InstanceDocument doc;
  if (!j.contains("genus")) fail("genus", "missing");
  if (!j.contains("degree")) fail("degree", "missing");
  if (!j.contains("points")) fail("points", "missing");
  long g = get_integer(j["genus"], "genus");
  if (g < 0 || g > 1000) fail("genus", "must be between 0 and 1000");
  doc.genus = static_cast<int>(g);
  doc.degree = get_integer(j["degree"], "degree");
  const json& pts = j["points"];
  if (!pts.is_array() || pts.empty()) fail("points", "expected a non-empty array");
  for (size_t i = 0; i < pts.size(); ++i) doc.points.push_back(parse_point(pts[i], "points[" + std::to_string(i) + "]"));
  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) fail("options", "expected an object");
    reject_unknown(o, {"method", "truncation", "force"}, "options.");
    if (o.contains("method") && !o["method"].is_null()) {
      if (!o["method"].is_string()) fail("options.method", "expected a string");
      doc.options.method = o["method"].get<std::string>();
      try {
        parse_method(*doc.options.method);
      } catch (const InvalidData& e) {
        fail("options.method", e.what());
      }
    }
    if (o.contains("truncation") && !o["truncation"].is_null())
      doc.options.truncation = static_cast<int>(get_integer(o["truncation"], "options.truncation"));
    if (o.contains("force")) {
      if (!o["force"].is_boolean()) fail("options.force", "expected true or false");
      doc.options.force = o["force"].get<bool>();
    }
  }
  to_instance(doc);  // validates the data itself
  return doc;
}

std::string emit_document(const InstanceDocument& doc) {
  json j;
  j["genus"] = doc.genus;
  j["degree"] = doc.degree;
  json pts = json::array();
  for (const auto& p : doc.points) {
    json w = json::array();
    for (const auto& x : p.weights) w.push_back(to_string(x));
    pts.push_back(json{{"weights", w}, {"multiplicities", p.multiplicities}});
  }
  j["points"] = pts;
  json o = json::object();
  if (doc.options.method) o["method"] = *doc.options.method;
  if (doc.options.truncation) o["truncation"] = *doc.options.truncation;
  o["force"] = doc.options.force;
  j["options"] = o;
  return j.dump(2) + "\n";
}

Instance to_instance(const InstanceDocument& doc) {
  std::vector<ParabolicPoint> pts;
  for (const auto& p : doc.points) pts.push_back({p.multiplicities, p.weights});
  try {
    return {doc.genus, doc.degree, QuasiParabolicData(std::move(pts))};
  } catch (const InvalidData& e) {
    throw InputError(std::string("points: ") + e.what());
  }
}

InstanceDocument from_instance(const Instance& inst, OptionsDoc options) {
  InstanceDocument doc;
  doc.genus = inst.genus;
  doc.degree = inst.degree;
  for (const auto& p : inst.data.points()) doc.points.push_back({p.weights, p.multiplicities});
  doc.options = std::move(options);
  return doc;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "latex") return Format::Latex;
  if (name == "text") return Format::Text;
  throw InputError("unknown format '" + name + "' (expected json, csv, latex or text)");
}

std::string emit_result(const BettiResult& r, Format f, std::optional<double> seconds) {
  std::ostringstream os;
  switch (f) {
    case Format::Json:
      os << result_json(r, seconds).dump(2) << "\n";
      break;
    case Format::Csv: {
      os << "dim,empty";
      for (size_t i = 0; i < r.betti.size(); ++i) os << ",b" << i;
      os << "\n" << r.dim << "," << (r.empty ? "true" : "false");
      for (long b : r.betti) os << "," << b;
      os << "\n";
      break;
    }
    case Format::Latex: {
      os << "\\begin{tabular}{|l|r|}\\hline\n";
      os << " & " << method_name(r.method) << " \\\\ \\hline\\hline\n";
      if (r.empty) {
        os << latex_beta(0) << " & 0 \\\\ \\hline\n";
      } else {
        for (long i = 0; i <= r.dim; ++i) os << latex_beta(i) << " & " << r.betti[i] << " \\\\ \\hline\n";
      }
      os << "\\end{tabular}\n";
      break;
    }
    case Format::Text: {
      os << "method: " << method_name(r.method) << "\n";
      os << "dim: " << r.dim << "\n";
      os << "ss=stable: " << (r.ss_eq_stable ? "yes" : "no") << "\n";
      if (r.empty) {
        os << "empty moduli space\n";
      } else {
        os << "poincare: " << r.poly.to_string() << "\n";
        os << "betti:";
        for (long b : r.betti) os << " " << b;
        os << "\n";
      }
      if (seconds) os << "seconds: " << *seconds << "\n";
      break;
    }
  }
  return os.str();
}

BettiResult parse_result(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    BettiResult r;
    r.method = parse_method(j.at("method").get<std::string>());
    r.dim = j.at("dim").get<long>();
    r.empty = j.at("empty").get<bool>();
    r.ss_eq_stable = j.at("ss_eq_stable").get<bool>();
    r.betti = j.at("betti").get<std::vector<long>>();
    for (const auto& term : j.at("polynomial"))
      r.poly += LaurentPoly::monomial(term.at(0).get<int>(), parse_rational(term.at(1).get<std::string>()));
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("result document: ") + e.what());
  }
}

std::pair<long, long> parse_range(const std::string& text) {
  auto to_long_strict = [&](const std::string& s) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InputError("bad range '" + text + "' (expected a..b)");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = to_long_strict(text);
    return {v, v};
  }
  long a = to_long_strict(text.substr(0, dots)), b = to_long_strict(text.substr(dots + 2));
  if (a > b) throw InputError("empty range '" + text + "'");
  return {a, b};
}

std::vector<SweepCell> run_sweep(const InstanceDocument& base, std::pair<long, long> genus,
                                 std::pair<long, long> degree) {
  std::vector<SweepCell> cells;
  for (long g = genus.first; g <= genus.second; ++g)
    for (long d = degree.first; d <= degree.second; ++d) {
      if (g < 0) throw InputError("genus range must be non-negative");
      cells.emplace_back();
      cells.back().genus = static_cast<int>(g);
      cells.back().degree = d;
    }
  const Method method = parse_method(base.options.method.value_or("closed"));
  ComputeOptions opts;
  opts.truncation = base.options.truncation;
  opts.force = base.options.force;
  auto results = parallel_map(cells.size(), [&](size_t i) -> std::pair<std::optional<BettiResult>, std::string> {
    InstanceDocument doc = base;
    doc.genus = cells[i].genus;
    doc.degree = cells[i].degree;
    try {
      return {compute(to_instance(doc), method, opts), ""};
    } catch (const std::exception& e) {
      return {std::nullopt, e.what()};
    }
  });
  for (size_t i = 0; i < cells.size(); ++i) {
    cells[i].result = std::move(results[i].first);
    cells[i].error = std::move(results[i].second);
  }
  return cells;
}

std::string sweep_latex(const std::vector<SweepCell>& cells) {
  long rows = 0;
  for (const auto& c : cells)
    if (c.result && !c.result->empty) rows = std::max(rows, c.result->dim);
  std::ostringstream os;
  os << "\\begin{tabular}{|l||";
  for (size_t i = 0; i < cells.size(); ++i) os << "r|";
  os << "}\\hline\n";
  os << " ";
  for (const auto& c : cells) os << "& g=" << c.genus << ", d=" << c.degree << (c.result ? "" : "$^*$") << " ";
  os << "\\\\ \\hline\\hline\n";
  for (long i = 0; i <= rows; ++i) {
    os << latex_beta(i);
    for (const auto& c : cells) {
      os << " & ";
      if (!c.result) {
        os << (i == 0 ? "?" : "-");
      } else if (c.result->empty) {
        os << (i == 0 ? "0" : "-");
      } else if (i <= c.result->dim) {
        os << c.result->betti[i];
      } else {
        os << "-";
      }
    }
    os << " \\\\ \\hline\n";
  }
  os << "\\end{tabular}\n";
  for (const auto& c : cells)
    if (!c.result) os << "% $^*$ g=" << c.genus << ", d=" << c.degree << ": " << c.error << "\n";
  return os.str();
}

std::string sweep_csv(const std::vector<SweepCell>& cells) {
  long width = 0;
  for (const auto& c : cells)
    if (c.result && !c.result->empty) width = std::max(width, c.result->dim);
  std::ostringstream os;
  os << "genus,degree,dim,empty";
  for (long i = 0; i <= width; ++i) os << ",b" << i;
  os << ",error\n";
  for (const auto& c : cells) {
    os << c.genus << "," << c.degree << ",";
    if (c.result) {
      os << c.result->dim << "," << (c.result->empty ? "true" : "false");
      for (long i = 0; i <= width; ++i) {
        os << ",";
        if (c.result->empty) {
          if (i == 0) os << 0;
        } else if (i <= c.result->dim) {
          os << c.result->betti[i];
        }
      }
      os << ",\n";
    } else {
      os << ",";
      for (long i = 0; i <= width; ++i) os << ",";
      std::string msg = c.error;
      for (char& ch : msg)
        if (ch == '"') ch = '\'';
      os << ",\"" << msg << "\"\n";
    }
  }
  return os.str();
}

namespace {

std::string describe(const QuasiParabolicData& r) {
  std::ostringstream os;
  os << "rank " << r.rank() << ", multiplicities";
  for (const auto& p : r.points()) {
    os << " (";
    for (size_t i = 0; i < p.multiplicities.size(); ++i) os << (i ? "," : "") << p.multiplicities[i];
    os << ")";
  }
  return os.str();
}

int classify(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (dynamic_cast<const StrictSemistable*>(&e)) return kStrictSemistable;
  if (dynamic_cast<const CrossCheckFailure*>(&e)) return kCrossCheck;
  if (dynamic_cast<const InvalidData*>(&e) || dynamic_cast<const MethodInapplicable*>(&e) ||
      dynamic_cast<const IntegralPsi*>(&e))
    return kInvalidInput;
  return kCrossCheck;
}

int cmd_compute(const std::string& path, const std::optional<std::string>& method, const std::string& format,
                std::optional<int> truncation, bool force, bool cross_check, bool timing, std::ostream& out) {
  InstanceDocument doc = parse_document(read_input(path));
  Format f = parse_format(format);
  Method m = parse_method(method.value_or(doc.options.method.value_or("closed")));
  ComputeOptions opts;
  opts.truncation = truncation ? truncation : doc.options.truncation;
  opts.force = force || doc.options.force;
  opts.cross_check = cross_check;
  auto t0 = std::chrono::steady_clock::now();
  BettiResult r = compute(to_instance(doc), m, opts);
  std::optional<double> seconds;
  if (timing) seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << emit_result(r, f, seconds);
  return kOk;
}

int cmd_compare(const std::string& path, const std::string& format, std::optional<int> truncation, bool force,
                std::ostream& out, std::ostream& err) {
  InstanceDocument doc = parse_document(read_input(path));
  ComputeOptions opts;
  opts.truncation = truncation ? truncation : doc.options.truncation;
  opts.force = force || doc.options.force;
  Comparison c = compare_methods(to_instance(doc), opts);
  if (format == "json") {
    json j;
    j["results"] = json::array();
    for (const auto& r : c.results) j["results"].push_back(result_json(r, std::nullopt));
    j["verdict"] = c.agree ? "AGREE" : "DISAGREE";
    if (c.first_difference) j["first_difference"] = *c.first_difference;
    if (!c.agree) j["detail"] = c.detail;
    out << j.dump(2) << "\n";
  } else if (format == "text") {
    for (const auto& r : c.results) {
      out << method_name(r.method) << ":";
      if (r.empty) out << " empty";
      for (long i = 0; i <= r.dim && !r.empty; ++i) out << " " << r.betti[i];
      out << "\n";
    }
    out << "verdict: " << (c.agree ? "AGREE" : "DISAGREE") << " (" << c.results.size() << " methods)\n";
  } else {
    throw InputError("compare supports --format text or json");
  }
  if (!c.agree) {
    err << "error: " << c.detail << "\n";
    return kCrossCheck;
  }
  return kOk;
}

int cmd_sweep(const std::string& path, const std::string& genus, const std::string& degree,
              const std::string& format, std::ostream& out) {
  InstanceDocument doc = parse_document(read_input(path));
  auto g = parse_range(genus.empty() ? std::to_string(doc.genus) : genus);
  auto d = parse_range(degree.empty() ? std::to_string(doc.degree) : degree);
  if (format != "latex" && format != "csv") throw InputError("sweep supports --format latex or csv");
  auto cells = run_sweep(doc, g, d);
  out << (format == "latex" ? sweep_latex(cells) : sweep_csv(cells));
  for (const auto& c : cells)
    if (c.result) return kOk;
  return kCrossCheck;
}

int cmd_check(const std::string& path, const std::string& format, std::ostream& out) {
  InstanceDocument doc = parse_document(read_input(path));
  Instance inst = to_instance(doc);
  auto witness = find_slope_coincidence(inst);
  const long dim = moduli_dim(inst.data, inst.genus);
  std::optional<bool> exists;
  std::string exists_note;
  if (inst.data.rank() == 2) {
    Rank2Profile p = rank2_profile(inst);
    if (rank2_admissible(p)) {
      exists = exists_stable_rank2(p);
    } else {
      exists_note = "undecided: some psi is an integer";
    }
  }
  if (format == "json") {
    json j;
    j["ss_eq_stable"] = !witness.has_value();
    if (witness) j["witness"] = {{"sub", describe(witness->sub)}, {"degree", witness->degree.get_str()}};
    j["dim"] = dim;
    if (exists) j["exists_stable"] = *exists;
    out << j.dump(2) << "\n";
  } else if (format == "text") {
    out << "ss=stable: " << (witness ? "FALSE" : "TRUE") << "\n";
    if (witness) out << "witness: sub-data " << describe(witness->sub) << ", degree " << witness->degree << "\n";
    out << "dim: " << dim << "\n";
    if (exists) out << "exists stable: " << (*exists ? "TRUE" : "FALSE") << "\n";
    if (!exists_note.empty()) out << "exists stable: " << exists_note << "\n";
  } else {
    throw InputError("check supports --format text or json");
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti numbers of moduli spaces of parabolic bundles"};
  app.name("parabetti");
  app.require_subcommand(1);

  std::string input, format = "json", genus_range, degree_range;
  std::optional<std::string> method;
  std::optional<int> truncation;
  bool force = false, cross_check = false, timing = false;

  auto* compute_cmd = app.add_subcommand("compute", "Poincare polynomial and Betti numbers of one instance");
  compute_cmd->add_option("input", input, "instance document, - for stdin")->required();
  compute_cmd->add_option("--method", method, "closed, qclosed, recursion or rank2");
  compute_cmd->add_option("--format", format, "json, csv, latex or text");
  compute_cmd->add_option("--truncation", truncation, "series length for the recursion");
  compute_cmd->add_flag("--force", force, "compute even when semistable is not stable");
  compute_cmd->add_flag("--cross-check", cross_check, "compare against the closed formula");
  compute_cmd->add_flag("--timing", timing, "report wall time");

  auto* compare_cmd = app.add_subcommand("compare", "run every applicable method and compare");
  compare_cmd->add_option("input", input, "instance document, - for stdin")->required();
  compare_cmd->add_option("--format", format, "text or json");
  compare_cmd->add_option("--truncation", truncation, "series length for the recursion");
  compare_cmd->add_flag("--force", force, "compute even when semistable is not stable");

  auto* sweep_cmd = app.add_subcommand("sweep", "table of Betti numbers over genus and degree");
  sweep_cmd->add_option("input", input, "base instance document, - for stdin")->required();
  sweep_cmd->add_option("--genus-range", genus_range, "a..b");
  sweep_cmd->add_option("--degree-range", degree_range, "a..b");
  sweep_cmd->add_option("--format", format, "latex or csv");

  auto* check_cmd = app.add_subcommand("check", "stability and existence checks");
  check_cmd->add_option("input", input, "instance document, - for stdin")->required();
  check_cmd->add_option("--format", format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*compute_cmd) return cmd_compute(input, method, format, truncation, force, cross_check, timing, out);
    if (*compare_cmd) return cmd_compare(input, compare_cmd->count("--format") ? format : "text", truncation, force, out, err);
    if (*sweep_cmd) return cmd_sweep(input, genus_range, degree_range, sweep_cmd->count("--format") ? format : "latex", out);
    if (*check_cmd) return cmd_check(input, check_cmd->count("--format") ? format : "text", out);
  } catch (const std::exception& e) {
    return classify(e, err);
  }
  return kInvalidInput;
}

}  // namespace parabetti::cli
