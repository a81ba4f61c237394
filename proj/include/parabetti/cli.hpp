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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parabetti/betti.hpp"
#include "parabetti/errors.hpp"
#include "parabetti/parabolic_data.hpp"

namespace parabetti::cli {

enum ExitCode { kOk = 0, kInvalidInput = 1, kStrictSemistable = 2, kCrossCheck = 3 };

// Invalid document; the message names the line/column or the field path.
class InputError : public InvalidData {
 public:
  using InvalidData::InvalidData;
};

struct PointDoc {
  std::vector<Rational> weights;
  std::vector<int> multiplicities;
  friend bool operator==(const PointDoc&, const PointDoc&) = default;
};

struct OptionsDoc {
  std::optional<std::string> method;
  std::optional<int> truncation;
  bool force = false;
  friend bool operator==(const OptionsDoc&, const OptionsDoc&) = default;
};

struct InstanceDocument {
  int genus = 0;
  long degree = 0;
  std::vector<PointDoc> points;
  OptionsDoc options;
  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

InstanceDocument parse_document(const std::string& text);
std::string emit_document(const InstanceDocument& doc);
Instance to_instance(const InstanceDocument& doc);
InstanceDocument from_instance(const Instance& inst, OptionsDoc options = {});

enum class Format { Json, Csv, Latex, Text };
Format parse_format(const std::string& name);

// `seconds` is only emitted when given, so default output is byte-stable.
std::string emit_result(const BettiResult& r, Format f, std::optional<double> seconds = std::nullopt);
// Inverse of the JSON emitter.
BettiResult parse_result(const std::string& json_text);

struct SweepCell {
  int genus = 0;
  long degree = 0;
  std::optional<BettiResult> result;
  std::string error;
};

// "a..b" or a single integer.
std::pair<long, long> parse_range(const std::string& text);

// Cells ordered by genus, then degree.
std::vector<SweepCell> run_sweep(const InstanceDocument& base, std::pair<long, long> genus,
                                 std::pair<long, long> degree);
// Betti numbers up to the middle dimension, one column per cell.
std::string sweep_latex(const std::vector<SweepCell>& cells);
std::string sweep_csv(const std::vector<SweepCell>& cells);

// Entry point shared by the binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parabetti::cli
