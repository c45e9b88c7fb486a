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

// impsel: generate instances, run impartial selection mechanisms, estimate
// approximation ratios, test impartiality and run concentration checks.
//
// Exit status: 0 success, 1 validation failure, 2 invariant violation.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "impsel/cli/commands.hpp"

namespace {

using impsel::cli::InstanceSpec;

void add_instance_flags(CLI::App *cmd, InstanceSpec &spec, bool eps_is_family) {
  cmd->add_option("--family", spec.family,
                  "single-arc | circulant | tight | complete | uniform | star");
  cmd->add_option("--n", spec.n, "vertex count");
  cmd->add_option("--N", spec.degree, "regular degree (circulant, tight)");
  cmd->add_option("--leaves", spec.leaves, "leaf count (star)");
  cmd->add_option("--p", spec.p, "arc probability (uniform)");
  if (eps_is_family) {
    cmd->add_option("--eps", spec.eps, "tight example eps in (0, 1/4)");
  } else {
    cmd->add_option("--tight-eps", spec.eps, "tight example eps in (0, 1/4)");
  }
}

int write_text(const std::string &text, const std::string &path) {
  if (path.empty()) {
    std::cout << text;
    return impsel::cli::kSuccess;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    return impsel::cli::kValidationFailure;
  }
  out << text;
  return impsel::cli::kSuccess;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Impartial selection mechanisms: experiments and checks"};
  app.set_config("--config", "",
                 "config file: [alpha] sections or alpha.trials=... keys; flags take precedence");
  app.require_subcommand(1);

  std::string out_path;

  // gen
  InstanceSpec gen_spec;
  auto *gen = app.add_subcommand("gen", "Write a canonical edge list for a graph family");
  add_instance_flags(gen, gen_spec, true);
  gen->add_option("--seed", gen_spec.seed, "seed (uniform family)");
  gen->add_option("--out", out_path, "output file (default stdout)");

  // alpha
  impsel::cli::AlphaConfig alpha_cfg;
  InstanceSpec alpha_spec;
  std::vector<std::string> alpha_graphs;
  std::vector<std::string> alpha_mechs = {"permutation"};
  double alpha_eps = 0.1;
  std::size_t alpha_c = 1;
  std::uint64_t alpha_graph_seed = 1;
  auto *alpha = app.add_subcommand("alpha", "Estimate E[winner in-degree] / max in-degree");
  add_instance_flags(alpha, alpha_spec, false);
  alpha->add_option("--graph", alpha_graphs, "edge-list file(s)");
  alpha->add_option("--graph-seed", alpha_graph_seed, "seed for the uniform family");
  alpha->add_option("--mechanism", alpha_mechs,
                    "comma-separated: baseline, permutation, two-partition, slicing, "
                    "slicing-multi")
      ->delimiter(',');
  alpha->add_option("--eps", alpha_eps, "slicing sampling rate in (0, 1)");
  alpha->add_option("--c", alpha_c, "winner count (slicing-multi)");
  alpha->add_option("--trials", alpha_cfg.trials, "Monte-Carlo trials");
  alpha->add_option("--seed", alpha_cfg.seed, "master seed");
  alpha->add_option("--jobs", alpha_cfg.jobs, "worker threads (output is unaffected)");
  alpha->add_flag("--exact", alpha_cfg.exact, "use exact enumeration oracles");
  alpha->add_option("--out", out_path, "CSV output file (default stdout)");

  // impartiality
  impsel::cli::ImpartialityConfig imp_cfg;
  InstanceSpec imp_spec;
  std::string imp_graph;
  std::string imp_mech = "permutation";
  double imp_eps = 0.1;
  std::size_t imp_c = 1;
  std::uint32_t imp_vertex = 0;
  std::vector<std::uint32_t> imp_new_out;
  auto *imp = app.add_subcommand("impartiality", "Coupled-tape impartiality test");
  add_instance_flags(imp, imp_spec, false);
  imp->add_option("--graph", imp_graph, "edge-list file");
  auto *vertex_opt = imp->add_option("--vertex", imp_vertex, "perturbed vertex");
  imp->add_option("--new-out", imp_new_out, "replacement out-neighbors")->delimiter(',');
  imp->add_option("--mechanism", imp_mech, "mechanism name");
  imp->add_option("--eps", imp_eps, "slicing sampling rate in (0, 1)");
  imp->add_option("--c", imp_c, "winner count (slicing-multi)");
  imp->add_option("--cases", imp_cfg.cases, "randomized (graph, vertex, perturbation) cases");
  imp->add_option("--trials", imp_cfg.tapes, "tapes per case");
  imp->add_option("--seed", imp_cfg.seed, "master seed");
  imp->add_option("--out", out_path, "report file (summary always goes to stdout)");

  // verify
  impsel::cli::VerifyConfig verify_cfg;
  std::size_t verify_trials = 0;
  auto *verify = app.add_subcommand("verify", "Run the concentration checkers");
  verify->add_option("--seed", verify_cfg.seed, "master seed");
  auto *verify_trials_opt = verify->add_option("--trials", verify_trials, "override trial counts");
  verify->add_option("--out", out_path, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : impsel::cli::kValidationFailure;
  }

  try {
    if (gen->parsed()) {
      impsel::cli::cmd_gen(gen_spec, out_path, std::cout, out_path.empty() ? std::cerr : std::cout);
      return impsel::cli::kSuccess;
    }
    if (alpha->parsed()) {
      std::string names;
      for (const auto &name : alpha_mechs) {
        names += name + ",";
      }
      alpha_cfg.mechanisms = impsel::cli::parse_mechanism_list(names, alpha_eps, alpha_c);
      if (alpha_graphs.empty()) {
        alpha_spec.seed = alpha_graph_seed;
        alpha_cfg.instances.push_back(alpha_spec);
      } else {
        for (const auto &path : alpha_graphs) {
          InstanceSpec file_spec;
          file_spec.path = path;
          alpha_cfg.instances.push_back(file_spec);
        }
      }
      return write_text(impsel::cli::cmd_alpha(alpha_cfg), out_path);
    }
    if (imp->parsed()) {
      imp_cfg.mechanism = impsel::cli::parse_mechanism_list(imp_mech, imp_eps, imp_c).front();
      if (!imp_graph.empty() || !imp_spec.family.empty()) {
        imp_spec.path = imp_graph;
        imp_cfg.instance = imp_spec;
      }
      if (vertex_opt->count() > 0) {
        imp_cfg.vertex = imp_vertex;
      }
      imp_cfg.new_out.assign(imp_new_out.begin(), imp_new_out.end());
      const auto outcome = impsel::cli::cmd_impartiality(imp_cfg);
      std::cout << outcome.summary << '\n';
      if (!out_path.empty() && write_text(outcome.report, out_path) != 0) {
        return impsel::cli::kValidationFailure;
      }
      return outcome.exit_code;
    }
    if (verify->parsed()) {
      if (verify_trials_opt->count() > 0) {
        verify_cfg.trials = verify_trials;
      }
      const auto outcome = impsel::cli::cmd_verify(verify_cfg);
      const int written = write_text(outcome.report, out_path);
      if (written != 0) {
        return written;
      }
      return outcome.all_passed ? impsel::cli::kSuccess : impsel::cli::kInvariantViolation;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return impsel::cli::kValidationFailure;
  }
  return impsel::cli::kValidationFailure;
}
