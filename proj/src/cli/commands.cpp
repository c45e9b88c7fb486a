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

#include "impsel/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "impsel/analysis/concentration.hpp"
#include "impsel/analysis/exact.hpp"
#include "impsel/analysis/impartiality.hpp"
#include "impsel/analysis/monte_carlo.hpp"
#include "impsel/edge_list.hpp"
#include "impsel/generators.hpp"

namespace impsel::cli {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

Digraph make_instance(const InstanceSpec &spec) {
  if (spec.family.empty()) {
    if (spec.path.empty()) {
      throw std::invalid_argument("no instance given (need --family or --graph)");
    }
    return read_edge_list_file(spec.path);
  }
  if (spec.family == "single-arc") {
    return single_arc(spec.n);
  }
  if (spec.family == "circulant") {
    return circulant_regular(spec.n, spec.degree);
  }
  if (spec.family == "tight") {
    return tight_example(spec.degree, spec.eps);
  }
  if (spec.family == "complete") {
    if (spec.n < 1) {
      throw std::invalid_argument("complete graph needs n >= 1");
    }
    return complete_digraph(spec.n);
  }
  if (spec.family == "uniform") {
    if (spec.n < 1) {
      throw std::invalid_argument("uniform graph needs n >= 1");
    }
    return uniform_digraph(spec.n, spec.p, spec.seed);
  }
  if (spec.family == "star") {
    return planted_star(spec.leaves);
  }
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

std::string instance_label(const InstanceSpec &spec) {
  if (spec.family.empty()) {
    return spec.path;
  }
  if (spec.family == "tight") {
    return "tight(N=" + std::to_string(spec.degree) + ",eps=" + format_real(spec.eps) + ")";
  }
  return spec.family;
}

std::string mechanism_label(const MechanismSpec &spec) {
  std::string label(mechanism_name(spec.kind));
  if (spec.kind == MechanismKind::slicing) {
    label += "[eps=" + format_real(spec.eps) + "]";
  } else if (spec.kind == MechanismKind::slicing_multiwinner) {
    label += "[eps=" + format_real(spec.eps) + ";c=" + std::to_string(spec.winners) + "]";
  }
  return label;
}

std::vector<MechanismSpec> parse_mechanism_list(const std::string &names, double eps,
                                                std::size_t winners) {
  std::vector<MechanismSpec> specs;
  std::stringstream ss(names);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) {
      continue;
    }
    MechanismSpec spec{parse_mechanism_kind(name), eps, winners};
    if (spec.kind != MechanismKind::slicing_multiwinner) {
      spec.winners = 1;
    }
    validate(spec);
    specs.push_back(spec);
  }
  if (specs.empty()) {
    throw std::invalid_argument("no mechanism given");
  }
  return specs;
}

void cmd_gen(const InstanceSpec &instance, const std::string &out_path, std::ostream &out,
             std::ostream &log) {
  const Digraph g = make_instance(instance);
  if (out_path.empty()) {
    out << emit_edge_list(g);
  } else {
    write_edge_list_file(g, out_path);
  }
  log << "n=" << g.vertex_count() << " m=" << g.arc_count() << " delta=" << g.max_in_degree()
      << '\n';
}

std::string cmd_alpha(const AlphaConfig &config) {
  if (config.mechanisms.empty() || config.instances.empty()) {
    throw std::invalid_argument("alpha needs at least one mechanism and one instance");
  }
  if (!config.exact && config.trials == 0) {
    throw std::invalid_argument("trials must be at least 1");
  }
  std::ostringstream csv;
  csv << kAlphaHeader << '\n';
  for (const InstanceSpec &instance : config.instances) {
    const Digraph g = make_instance(instance);
    for (const MechanismSpec &mech : config.mechanisms) {
      csv << mechanism_label(mech) << ',' << g.vertex_count() << ',' << g.arc_count() << ','
          << g.max_in_degree() << ',';
      if (config.exact) {
        const ExactAlpha ex = exact_alpha(mech, g);
        csv << ex.estimate.trials << ',' << to_decimal_string(ex.mean) << ','
            << to_decimal_string(ex.ratio) << ",0,true,";
      } else {
        const AlphaEstimate est =
            monte_carlo_alpha(mech, g, config.trials, config.seed, config.jobs);
        csv << est.trials << ',' << format_real(est.mean_winner_degree) << ','
            << format_real(est.ratio) << ',' << format_real(est.ci_halfwidth) << ",false,";
      }
      csv << config.seed << '\n';
    }
  }
  return csv.str();
}

ImpartialityOutcome cmd_impartiality(const ImpartialityConfig &config) {
  validate(config.mechanism);
  if (config.tapes == 0) {
    throw std::invalid_argument("need at least one tape per case");
  }
  ImpartialityReport total;
  std::size_t cases = 0;
  if (config.instance) {
    if (!config.vertex) {
      throw std::invalid_argument("--vertex is required with an explicit instance");
    }
    const Digraph g = make_instance(*config.instance);
    const auto seeds = derive_seeds(config.seed, config.tapes);
    total = impartiality_coupling_test(config.mechanism, g, *config.vertex, config.new_out,
                                       seeds);
    cases = 1;
  } else {
    if (config.cases == 0) {
      throw std::invalid_argument("need at least one case");
    }
    for (std::size_t c = 0; c < config.cases; ++c) {
      const PerturbationCase pc = random_perturbation_case(mix_seed(config.seed, c));
      const auto seeds = derive_seeds(mix_seed(~config.seed, c), config.tapes);
      total.merge(impartiality_coupling_test(config.mechanism, pc.graph, pc.vertex,
                                             pc.new_out, seeds));
    }
    cases = config.cases;
  }

  ImpartialityOutcome outcome;
  outcome.cases = cases;
  outcome.tapes = total.tapes_tested;
  outcome.violations = total.violations.size();
  outcome.trace_violations = total.trace_violations;
  outcome.summary = "mechanism=" + mechanism_label(config.mechanism) +
                    " cases=" + std::to_string(cases) +
                    " violations=" + std::to_string(outcome.violations);
  std::ostringstream report;
  report << outcome.summary << '\n';
  report << "tapes=" << outcome.tapes << " trace_violations=" << outcome.trace_violations
         << '\n';
  for (const ImpartialityViolation &v : total.violations) {
    report << "violation seed=" << v.seed << " vertex=" << v.vertex
           << " original=" << (v.original_wins ? 1 : 0)
           << " modified=" << (v.modified_wins ? 1 : 0) << '\n';
  }
  outcome.report = report.str();
  const bool broken = outcome.violations > 0 || outcome.trace_violations > 0;
  outcome.exit_code =
      claims_impartial(config.mechanism.kind) && broken ? kInvariantViolation : kSuccess;
  return outcome;
}

VerifyOutcome cmd_verify(const VerifyConfig &config) {
  VerifyOutcome out;
  std::ostringstream report;
  auto trials_or = [&](std::size_t fallback) { return config.trials.value_or(fallback); };

  {
    const std::size_t trials = trials_or(10000);
    const double value = balanced_fraction(1000, 100, 0.2, trials, mix_seed(config.seed, 1));
    const bool pass = value >= 0.8;
    report << "check=balanced_fraction n=1000 delta=100 eps=0.2 trials=" << trials
           << " value=" << format_real(value) << " threshold=>=0.8 pass=" << pass << '\n';
    out.all_passed = out.all_passed && pass;
  }
  {
    const std::size_t trials = trials_or(100000);
    const double value =
        hypergeometric_tail(1000, 100, 300, 0.1, trials, mix_seed(config.seed, 2));
    const bool pass = value < 0.1;
    report << "check=hypergeometric_tail n=1000 delta=100 k=300 eps1=0.1 trials=" << trials
           << " value=" << format_real(value) << " threshold=<0.1 pass=" << pass << '\n';
    out.all_passed = out.all_passed && pass;
  }
  {
    const std::size_t trials = trials_or(100000);
    const ChernoffCheck c = chernoff_empirical(1000, 0.5, 0.2, trials, mix_seed(config.seed, 3));
    const bool pass = c.empirical <= c.bound;
    report << "check=chernoff n=1000 p=0.5 delta=0.2 trials=" << trials
           << " value=" << format_real(c.empirical) << " threshold=<=" << format_real(c.bound)
           << " pass=" << pass << '\n';
    out.all_passed = out.all_passed && pass;
  }
  out.report = report.str();
  return out;
}

} // namespace impsel::cli
