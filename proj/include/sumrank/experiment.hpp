// Copyright 2026 The sumrank Authors
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

#ifndef SUMRANK_EXPERIMENT_HPP
#define SUMRANK_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sumrank/io.hpp"

namespace sumrank {

enum ExitCode : int { kOk = 0, kViolation = 1, kInvalid = 2, kInfeasible = 3 };

struct GenOptions {
  std::string what = "lrs";  // lrs, flrs, design, evasive
  unsigned h = 2, n = 2, m = 2;
  Base sigma = Base::h;
  std::vector<std::size_t> blocks{2};
  std::size_t k = 1;
  std::size_t lambda = 1, ell = 1, eta = 1;
  double epsilon = 0.25;
  std::size_t M = 1, s = 1, A = 0;
  std::uint64_t seed = 0;
  /// Draw evaluation points from the seed instead of the demo powers.
  bool randomize = false;
  std::string out;
};

struct ExperimentConfig {
  std::string params;
  std::size_t s = 1;
  std::optional<std::size_t> errors;
  /// Error weight as a fraction of the floored radius.
  std::optional<double> radius_fraction;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  /// JSONL destination; empty or "-" writes records to the output stream.
  std::string out;
  std::string design;
  unsigned threads = 1;
  bool timing = false;
};

ExperimentConfig config_from_json(const Json& j);

struct VerifyOptions {
  std::string path;
  std::uint64_t cap = 1000000;
  std::size_t samples = 20000;
  std::size_t affine_trials = 1000;
  std::vector<std::size_t> dims{1, 2};
  std::uint64_t seed = 0;
};

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int cmd_run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_distance(const std::string& params, std::uint64_t max_messages, std::ostream& out, std::ostream& err);

}  // namespace sumrank

#endif  // SUMRANK_EXPERIMENT_HPP
