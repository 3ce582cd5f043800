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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sumrank/experiment.hpp"

int main(int argc, char** argv) {
  using namespace sumrank;
  CLI::App app{"sumrank: sum-rank metric code experiments"};
  app.require_subcommand(1);

  GenOptions gen;
  std::vector<unsigned> field{2, 2, 2};
  std::string sigma = "h";
  auto* g = app.add_subcommand("gen", "write a parameter, design or evasive-set file");
  g->add_option("what", gen.what, "lrs, flrs, design or evasive")->required();
  g->add_option("--field", field, "h,n,m")->delimiter(',')->expected(3);
  g->add_option("--sigma", sigma, "h (subfield setting) or q (classical LRS)");
  g->add_option("--blocks", gen.blocks, "block lengths")->delimiter(',');
  g->add_option("--k", gen.k, "message length");
  g->add_option("--lambda", gen.lambda, "folding parameter");
  g->add_option("--ell", gen.ell, "number of classes");
  g->add_option("--eta", gen.eta, "folded columns per class");
  g->add_option("--epsilon", gen.epsilon);
  g->add_option("--M", gen.M, "number of design subspaces");
  g->add_option("--s", gen.s, "design test dimension");
  g->add_option("--A", gen.A, "design intersection budget");
  g->add_option("--seed", gen.seed);
  g->add_flag("--randomize", gen.randomize, "seeded random evaluation points");
  g->add_option("--out", gen.out);

  ExperimentConfig run;
  std::string config;
  auto* r = app.add_subcommand("run", "encode, corrupt and decode seeded trials");
  r->add_option("--config", config, "JSON config; explicit flags override it");
  r->add_option("--params", run.params);
  r->add_option("--s", run.s);
  r->add_option("--errors", run.errors, "planted sum-rank weight (default: floored radius)");
  r->add_option("--radius-fraction", run.radius_fraction);
  r->add_option("--trials", run.trials);
  r->add_option("--seed", run.seed);
  r->add_option("--out", run.out, "JSONL path; - for stdout");
  r->add_option("--design", run.design, "restrict LRS messages to a subspace design");
  r->add_option("--threads", run.threads);
  r->add_flag("--timing", run.timing, "add wall_ms to each record");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "check a design, evasive set or parameter file");
  v->add_option("file", ver.path)->required();
  v->add_option("--cap", ver.cap, "enumeration budget");
  v->add_option("--samples", ver.samples);
  v->add_option("--affine-trials", ver.affine_trials);
  v->add_option("--dims", ver.dims)->delimiter(',');
  v->add_option("--seed", ver.seed);

  std::string dparams;
  std::uint64_t dmax = std::uint64_t{1} << 20;
  auto* d = app.add_subcommand("distance", "exhaustive minimum sum-rank distance");
  d->add_option("--params", dparams)->required();
  d->add_option("--max-messages", dmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  if (g->parsed()) {
    gen.h = field[0];
    gen.n = field[1];
    gen.m = field[2];
    try {
      gen.sigma = base_from_string(sigma);
    } catch (const std::invalid_argument& e) {
      std::cerr << "invalid: " << e.what() << '\n';
      return kInvalid;
    }
    return cmd_gen(gen, std::cout, std::cerr);
  }
  if (r->parsed()) {
    ExperimentConfig cfg = run;
    if (!config.empty()) {
      try {
        cfg = config_from_json(read_json_file(config));
      } catch (const std::exception& e) {
        std::cerr << "invalid: " << e.what() << '\n';
        return kInvalid;
      }
      for (auto* opt : r->get_options()) {
        if (opt->count() == 0) continue;
        const std::string name = opt->get_name();
        if (name == "--params") cfg.params = run.params;
        else if (name == "--s") cfg.s = run.s;
        else if (name == "--errors") cfg.errors = run.errors;
        else if (name == "--radius-fraction") cfg.radius_fraction = run.radius_fraction;
        else if (name == "--trials") cfg.trials = run.trials;
        else if (name == "--seed") cfg.seed = run.seed;
        else if (name == "--out") cfg.out = run.out;
        else if (name == "--design") cfg.design = run.design;
        else if (name == "--threads") cfg.threads = run.threads;
        else if (name == "--timing") cfg.timing = run.timing;
      }
    }
    if (cfg.params.empty()) {
      std::cerr << "invalid: run needs --params or a config with \"params\"\n";
      return kInvalid;
    }
    return cmd_run(cfg, std::cout, std::cerr);
  }
  if (v->parsed()) return cmd_verify(ver, std::cout, std::cerr);
  return cmd_distance(dparams, dmax, std::cout, std::cerr);
}
