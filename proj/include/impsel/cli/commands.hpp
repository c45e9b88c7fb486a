// Copyright 2026 The impsel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMPSEL_CLI_COMMANDS_HPP_
#define IMPSEL_CLI_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "impsel/digraph.hpp"
#include "impsel/mechanisms.hpp"

namespace impsel::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kInvariantViolation = 2,
};

// A generated family or an edge-list file.
struct InstanceSpec {
  std::string family; // single-arc | circulant | tight | complete | uniform | star
  std::string path;   // used when family is empty
  std::size_t n = 0;
  std::size_t degree = 0; // --N
  std::size_t leaves = 0;
  double eps = 0.1; // tight example parameter
  double p = 0.5;
  std::uint64_t seed = 1;
};

// Throws std::invalid_argument / GraphError / ParseError on bad input.
Digraph make_instance(const InstanceSpec &spec);

// "single-arc", "tight(N=2,eps=0.2)", or the file path.
std::string instance_label(const InstanceSpec &spec);

// "permutation", "slicing[eps=0.1]", "slicing-multi[eps=0.2;c=2]".
std::string mechanism_label(const MechanismSpec &spec);

// Parses a comma-separated list of mechanism names sharing eps and c.
std::vector<MechanismSpec> parse_mechanism_list(const std::string &names, double eps,
                                                std::size_t winners);

// Writes the canonical edge list to `out_path` (or `out` when empty) and a
// summary "n=<n> m=<m> delta=<delta>" to `log`.
void cmd_gen(const InstanceSpec &instance, const std::string &out_path, std::ostream &out,
             std::ostream &log);

struct AlphaConfig {
  std::vector<MechanismSpec> mechanisms;
  std::vector<InstanceSpec> instances;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  bool exact = false;
};

inline constexpr const char *kAlphaHeader = "mechanism,n,m,delta,trials,mean,ratio,ci,exact,seed";

// CSV text, header first, one row per (instance, mechanism). Output bytes
// are a function of the config alone; `jobs` does not affect them.
std::string cmd_alpha(const AlphaConfig &config);

struct ImpartialityConfig {
  MechanismSpec mechanism;
  std::optional<InstanceSpec> instance; // randomized cases when absent
  std::optional<VertexId> vertex;
  std::vector<VertexId> new_out;
  std::size_t cases = 100;
  std::size_t tapes = 1000;
  std::uint64_t seed = 1;
};

struct ImpartialityOutcome {
  std::size_t cases = 0;
  std::size_t tapes = 0;
  std::size_t violations = 0;
  std::size_t trace_violations = 0;
  std::string summary; // "mechanism=<id> cases=<k> violations=<v>"
  std::string report;  // summary plus one line per violation
  int exit_code = kSuccess;
};

ImpartialityOutcome cmd_impartiality(const ImpartialityConfig &config);

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials; // overrides every checker's default
};

struct VerifyOutcome {
  std::string report;
  bool all_passed = true;
};

VerifyOutcome cmd_verify(const VerifyConfig &config);

// %.6g
std::string format_real(double x);

} // namespace impsel::cli

#endif // IMPSEL_CLI_COMMANDS_HPP_
