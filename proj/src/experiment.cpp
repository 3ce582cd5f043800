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

#include "sumrank/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <thread>

#include "sumrank/random.hpp"

namespace sumrank {

namespace {

void print_report(std::ostream& err, const std::string& head, const std::vector<std::string>& report) {
  err << head << '\n';
  for (const auto& r : report) err << "  " << r << '\n';
}

void emit(std::ostream& out, const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
    out << path << '\n';
  }
}

std::vector<Elem> random_block_points(const Tower& f, Base sigma, std::size_t len, Rng& rng) {
  while (true) {
    std::vector<Elem> b(len);
    for (auto& x : b) x = sigma == Base::h ? f.random_in(Base::q, rng) : f.random(rng);
    if (f.rank_over(b, sigma) == len) return b;
  }
}

int gen_impl(const GenOptions& o, std::ostream& out, std::ostream& err) {
  auto tower = std::make_shared<const Tower>(o.h, o.n, o.m);
  if (o.what == "lrs") {
    std::vector<std::string> report;
    LrsParams p;
    try {
      p = make_demo_lrs(tower, o.sigma, o.blocks, o.k);
    } catch (const std::invalid_argument& e) {
      print_report(err, "invalid LRS parameters:", {e.what()});
      return kInvalid;
    }
    if (o.randomize) {
      p.beta.clear();
      for (std::size_t i = 0; i < o.blocks.size(); ++i) {
        Rng rng(derive_seed(o.seed, i, "beta"));
        for (const auto& x : random_block_points(*tower, o.sigma, o.blocks[i], rng)) p.beta.push_back(x);
      }
    }
    report = validate(p);
    if (!report.empty()) {
      print_report(err, "invalid LRS parameters:", report);
      return kInvalid;
    }
    emit(out, o.out, to_json(p));
    return kOk;
  }
  if (o.what == "flrs") {
    FlrsParams p;
    try {
      p = make_demo_flrs(tower, o.lambda, o.ell, o.eta, o.k);
    } catch (const std::invalid_argument& e) {
      print_report(err, "invalid FLRS parameters:", {e.what()});
      return kInvalid;
    }
    p.epsilon = o.epsilon;
    p.evasive_seed = o.seed;
    const auto report = validate(p);
    if (!report.empty()) {
      print_report(err, "invalid FLRS parameters:", report);
      return kInvalid;
    }
    for (const auto& w : warnings(p)) err << "warning: " << w << '\n';
    emit(out, o.out, to_json(p));
    return kOk;
  }
  if (o.what == "design") {
    if (o.s < 1 || o.s > o.m) {
      print_report(err, "invalid design parameters:", {"s=" + std::to_string(o.s) + " must satisfy 1 <= s <= m"});
      return kInvalid;
    }
    emit(out, o.out, to_json(*tower, random_design(*tower, o.M, o.s, o.A, o.epsilon, o.seed)));
    return kOk;
  }
  if (o.what == "evasive") {
    if (o.epsilon < 0 || o.epsilon > 1) {
      print_report(err, "invalid evasive-set parameters:", {"epsilon must lie in [0, 1]"});
      return kInvalid;
    }
    emit(out, o.out, to_json(EvasiveSet{tower, o.k, o.epsilon, o.seed}));
    return kOk;
  }
  print_report(err, "unknown generator \"" + o.what + "\"", {"expected lrs, flrs, design or evasive"});
  return kInvalid;
}

struct TrialOutcome {
  Json record;
  bool asserted = false;
  bool contained = false;
  bool dim_ok = true;
  long dim = -1;
  std::optional<std::uint64_t> list_size;
};

std::optional<std::uint64_t> points(const AffineSet& s, unsigned h) {
  if (s.is_empty()) return 0;
  const double bits = static_cast<double>(s.dim()) * std::log2(static_cast<double>(h));
  if (bits > 53) return std::nullopt;
  std::uint64_t v = 1;
  for (long i = 0; i < s.dim(); ++i) v *= h;
  return v;
}

Json nullable(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

class Runner {
 public:
  virtual ~Runner() = default;
  virtual std::string family() const = 0;
  virtual std::size_t radius() const = 0;
  virtual std::size_t max_weight() const = 0;
  /// e for which containment is guaranteed.
  virtual bool guaranteed(std::size_t e) const = 0;
  virtual Json bounds() const = 0;
  virtual TrialOutcome trial(std::uint64_t seed, std::size_t e) const = 0;
};

class LrsRunner : public Runner {
 public:
  LrsRunner(const Json& params, std::size_t s, const std::string& design_path)
      : code_(lrs_params_from_json(params)), s_(s) {
    check_decoder_params(code_, s);
    if (!design_path.empty()) {
      design_ = design_from_json(read_json_file(design_path));
      const Tower& f = code_.field();
      if (design_->h != f.h() || design_->n != f.n() || design_->m != f.m())
        throw std::invalid_argument("design field does not match the code's field");
      if (design_->subspaces.size() < code_.k())
        throw std::invalid_argument("design has " + std::to_string(design_->subspaces.size()) +
                                    " subspaces, the code needs k=" + std::to_string(code_.k()));
      design_->subspaces.resize(code_.k());
    }
  }
  std::string family() const override { return "lrs"; }
  std::size_t radius() const override { return lrs_radius(code_.n(), code_.k(), s_); }
  std::size_t max_weight() const override { return code_.params().profile().max_weight(code_.field()); }
  bool guaranteed(std::size_t e) const override {
    return static_cast<long>(code_.n() - e) > lrs_degree_bound(code_.n(), code_.k(), s_) + static_cast<long>(code_.k()) - 1;
  }
  Json bounds() const override {
    Json j{{"step_dim_bound", s_ - 1}};
    if (design_) j["design_A"] = design_->A;
    return j;
  }
  TrialOutcome trial(std::uint64_t seed, std::size_t e) const override {
    const Tower& f = code_.field();
    Rng rng(seed);
    std::vector<Elem> msg;
    if (design_) {
      msg = sample_design_message(f, design_->subspaces, rng);
    } else {
      for (std::size_t i = 0; i < code_.k(); ++i) msg.push_back(f.random(rng));
    }
    const auto err = sample_error(f, code_.params().profile(), e, derive_seed(seed, 0, "error"));
    const auto y = add(f, code_.encode(msg), err);
    const std::span<const DigitMatrix> H = design_ ? std::span<const DigitMatrix>(design_->subspaces)
                                                   : std::span<const DigitMatrix>();
    const auto res = decode_list(code_, y, s_, H, 0);
    const auto digits = message_digits(f, msg);
    TrialOutcome o;
    o.contained = res.space.contains(f.base(), digits);
    o.dim = res.space.dim();
    o.list_size = points(res.space, f.h());
    const std::size_t step = res.P.step_dim_q();
    o.dim_ok = step <= s_ - 1;
    if (design_) o.dim_ok = o.dim_ok && o.dim <= static_cast<long>(design_->A);
    o.record = Json{{"message_id", hex64(keyed_hash(0, digits))},
                    {"weight", sum_rank_weight(f, err)},
                    {"list_size", nullable(o.list_size)},
                    {"contained", o.contained},
                    {"dim", o.dim},
                    {"step_dim", step}};
    return o;
  }

 private:
  LrsCode code_;
  std::size_t s_;
  std::optional<SubspaceDesign> design_;
};

class FlrsRunner : public Runner {
 public:
  FlrsRunner(const Json& params, std::size_t s) : code_(flrs_params_from_json(params)), s_(s) {
    check_flrs_decoder_params(code_, s);
  }
  std::string family() const override { return "flrs"; }
  std::size_t radius() const override { return flrs_radius(code_.n(), code_.params().lambda, code_.k(), s_); }
  std::size_t max_weight() const override { return code_.params().profile().max_weight(code_.field()); }
  bool guaranteed(std::size_t e) const override {
    const auto& p = code_.params();
    if (e > p.n()) return false;
    const long lhs = static_cast<long>((p.n() - e) * (p.lambda - s_ + 1));
    return lhs > flrs_degree_bound(p.n(), p.lambda, p.k, s_) + static_cast<long>(p.k) - 1;
  }
  Json bounds() const override {
    const std::size_t b = flrs_dimension_bound(code_.k(), code_.field().m(), s_);
    return Json{{"free_bound", b}, {"dim_bound", b * code_.field().t()}};
  }
  TrialOutcome trial(std::uint64_t seed, std::size_t e) const override {
    const Tower& f = code_.field();
    Rng rng(seed);
    std::vector<Elem> msg;
    for (std::size_t i = 0; i < code_.k(); ++i) msg.push_back(f.random(rng));
    const auto err = sample_error(f, code_.params().profile(), e, derive_seed(seed, 0, "error"));
    const auto y = add(f, code_.encode(msg), err);
    const auto res = flrs_decode_list(code_, y, s_);
    const auto digits = message_digits(f, msg);
    TrialOutcome o;
    o.contained = res.solution.space.contains(f.base(), digits);
    o.dim = res.solution.space.dim();
    if (res.list) o.list_size = res.list->size();
    const std::size_t b = flrs_dimension_bound(code_.k(), f.m(), s_);
    o.dim_ok = o.dim <= static_cast<long>(b * f.t()) &&
               (res.solution.space.is_empty() || res.solution.free_indices.size() <= b);
    o.record = Json{{"message_id", hex64(keyed_hash(0, digits))},
                    {"weight", sum_rank_weight(f, err)},
                    {"list_size", nullable(o.list_size)},
                    {"contained", o.contained},
                    {"dim", o.dim},
                    {"free", res.solution.free_indices.size()}};
    return o;
  }

 private:
  FlrsCode code_;
  std::size_t s_;
};

int run_impl(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.trials < 1) {
    err << "trials must be at least 1\n";
    return kInvalid;
  }
  const Json params = read_json_file(cfg.params);
  const std::string kind = kind_of(params);
  std::unique_ptr<Runner> runner;
  if (kind == "lrs") runner = std::make_unique<LrsRunner>(params, cfg.s, cfg.design);
  else if (kind == "flrs") runner = std::make_unique<FlrsRunner>(params, cfg.s);
  else throw std::invalid_argument("run needs an lrs or flrs parameter file, got kind \"" + kind + "\"");
  if (kind == "flrs" && !cfg.design.empty()) throw std::invalid_argument("designs apply to lrs runs only");

  const std::size_t radius = runner->radius();
  std::size_t e = radius;
  if (cfg.errors) e = *cfg.errors;
  else if (cfg.radius_fraction) e = static_cast<std::size_t>(std::floor(*cfg.radius_fraction * radius + 1e-9));
  if (e > runner->max_weight())
    throw std::invalid_argument("e=" + std::to_string(e) + " exceeds the maximum sum-rank weight " +
                                std::to_string(runner->max_weight()));
  const bool within = e <= radius;
  const bool asserted = within && runner->guaranteed(e);

  std::vector<TrialOutcome> results(cfg.trials);
  std::vector<double> wall(cfg.trials, 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < cfg.trials;) {
      const auto t0 = std::chrono::steady_clock::now();
      const std::uint64_t seed = derive_seed(cfg.seed, i, "trial");
      results[i] = runner->trial(seed, e);
      wall[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.trials)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::ofstream file;
  const bool to_stream = cfg.out.empty() || cfg.out == "-";
  if (!to_stream) {
    file.open(cfg.out);
    if (!file) throw std::runtime_error("cannot write " + cfg.out);
  }
  std::ostream& jsonl = to_stream ? out : file;
  std::size_t contained = 0, violations = 0, dim_failures = 0;
  long max_dim = -1;
  bool list_known = true;
  std::uint64_t max_list = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const auto& r = results[i];
    Json rec{{"trial", i}, {"seed", hex64(derive_seed(cfg.seed, i, "trial"))}, {"e", e}};
    for (const auto& [key, value] : r.record.items()) rec[key] = value;
    rec["within_radius"] = within;
    if (cfg.timing) rec["wall_ms"] = wall[i];
    jsonl << rec.dump() << '\n';
    contained += r.contained;
    if (asserted && !r.contained) ++violations;
    if (!r.dim_ok) ++dim_failures;
    max_dim = std::max(max_dim, r.dim);
    if (r.list_size) max_list = std::max(max_list, *r.list_size);
    else list_known = false;
  }
  if (!to_stream) file.close();

  Json summary{{"family", runner->family()},
               {"trials", cfg.trials},
               {"s", cfg.s},
               {"e", e},
               {"radius", radius},
               {"within_radius", within},
               {"containment_asserted", asserted},
               {"containment_rate", static_cast<double>(contained) / static_cast<double>(cfg.trials)},
               {"violations", violations},
               {"dimension_failures", dim_failures},
               {"max_dim", max_dim},
               {"max_list_size", list_known ? Json(max_list) : Json(nullptr)},
               {"bounds", runner->bounds()}};
  summary["ok"] = violations == 0 && dim_failures == 0;
  out << summary.dump() << '\n';
  return summary["ok"].get<bool>() ? kOk : kViolation;
}

int verify_impl(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const Json j = read_json_file(o.path);
  const std::string kind = kind_of(j);
  if (kind == "lrs" || kind == "flrs") {
    const auto report = kind == "lrs" ? validate(lrs_params_from_json(j)) : validate(flrs_params_from_json(j));
    out << Json{{"kind", kind}, {"valid", report.empty()}, {"violations", report}}.dump() << '\n';
    if (!report.empty()) print_report(err, "invalid " + kind + " parameters:", report);
    return report.empty() ? kOk : kInvalid;
  }
  if (kind == "design") {
    const auto tower = tower_from_json(j["field"]);
    const auto d = design_from_json(j);
    const auto v = verify_design(*tower, d, o.cap);
    Json w = Json::array();
    for (const auto& x : v.worst_W) w.push_back(elem_to_hex(*tower, x));
    Json verdict{{"kind", "design"}, {"ok", v.ok},           {"A", d.A},
                 {"worst_sum", v.worst_sum}, {"subspaces_checked", v.checked}};
    verdict[v.ok ? "worst_W" : "witness_W"] = w;
    out << verdict.dump() << '\n';
    return v.ok ? kOk : kViolation;
  }
  if (kind == "evasive") {
    const auto S = evasive_from_json(j);
    const Tower& f = *S.tower;
    Rng rng(derive_seed(o.seed, 0, "evasive-density"));
    std::size_t hits = 0;
    for (std::size_t i = 0; i < o.samples; ++i) {
      std::vector<Elem> v(S.k);
      for (auto& x : v) x = f.random(rng);
      hits += S.contains(v);
    }
    const double p = S.density(), mean = p * static_cast<double>(o.samples);
    const double tol = 5 * std::sqrt(static_cast<double>(o.samples) * p * (1 - p)) + 1;
    const bool density_ok = std::fabs(static_cast<double>(hits) - mean) <= tol;
    Json lists = Json::array();
    bool lists_ok = true;
    for (std::size_t d : o.dims) {
      Rng r(derive_seed(o.seed, d, "evasive-affine"));
      std::size_t worst = 0;
      for (std::size_t trial = 0; trial < o.affine_trials; ++trial) {
        std::vector<Elem> off(S.k);
        for (auto& x : off) x = f.random(r);
        std::vector<std::vector<Elem>> basis;
        AffineSet V = AffineSet::empty(0);
        do {
          basis.assign(d, std::vector<Elem>(S.k));
          for (auto& b : basis)
            for (auto& x : b) x = f.random(r);
          V = affine_span_qm(f, off, basis);
        } while (V.dim() != static_cast<long>(d * f.t()));
        worst = std::max(worst, intersect_evasive(S, V, o.cap).size());
      }
      Json entry{{"dim", d}, {"spaces", o.affine_trials}, {"max_intersection", worst}};
      if (S.epsilon > 0) {
        const double bound = 8.0 * static_cast<double>(d) / S.epsilon;
        entry["bound"] = bound;
        entry["ok"] = static_cast<double>(worst) <= bound;
        lists_ok = lists_ok && static_cast<double>(worst) <= bound;
      }
      lists.push_back(entry);
    }
    Json verdict{{"kind", "evasive"},
                 {"ok", density_ok && lists_ok},
                 {"modulus", S.modulus()},
                 {"samples", o.samples},
                 {"hits", hits},
                 {"expected", mean},
                 {"tolerance", tol},
                 {"density_ok", density_ok},
                 {"intersections", lists}};
    out << verdict.dump() << '\n';
    return density_ok && lists_ok ? kOk : kViolation;
  }
  throw std::invalid_argument("cannot verify a file of kind \"" + kind + "\"");
}

int distance_impl(const std::string& path, std::uint64_t max_messages, std::ostream& out) {
  const Json j = read_json_file(path);
  if (kind_of(j) != "lrs") throw std::invalid_argument("distance needs an lrs parameter file");
  const LrsCode code(lrs_params_from_json(j));
  const std::size_t d = min_distance_exhaustive(code, max_messages);
  const std::size_t singleton = code.n() - code.k() + 1;
  out << Json{{"n", code.n()}, {"k", code.k()}, {"distance", d}, {"singleton", singleton}, {"msrd", d == singleton}}
             .dump()
      << '\n';
  return kOk;
}

template <class F>
int guarded(std::ostream& err, F&& fn) {
  try {
    return fn();
  } catch (const VerificationInfeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::length_error& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "invalid: " << e.what() << '\n';
    return kInvalid;
  } catch (const FieldError& e) {
    err << "invalid: " << e.what() << '\n';
    return kInvalid;
  } catch (const Json::exception& e) {
    err << "invalid: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  c.params = j.at("params").get<std::string>();
  c.s = j.value("s", std::size_t{1});
  if (j.contains("errors")) c.errors = j["errors"].get<std::size_t>();
  if (j.contains("radius_fraction")) c.radius_fraction = j["radius_fraction"].get<double>();
  c.trials = j.value("trials", std::size_t{1});
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  c.out = j.value("out", std::string{});
  c.design = j.value("design", std::string{});
  c.threads = j.value("threads", 1u);
  c.timing = j.value("timing", false);
  return c;
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return gen_impl(opt, out, err); });
}

int cmd_run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return run_impl(cfg, out, err); });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return verify_impl(opt, out, err); });
}

int cmd_distance(const std::string& params, std::uint64_t max_messages, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return distance_impl(params, max_messages, out); });
}

}  // namespace sumrank
