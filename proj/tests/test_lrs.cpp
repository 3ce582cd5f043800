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

#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "sumrank/lrs.hpp"
#include "sumrank/random.hpp"

using namespace sumrank;

namespace {

std::vector<Elem> random_msg(const Tower& f, std::size_t k, Rng& rng) {
  std::vector<Elem> m(k);
  for (auto& c : m) c = f.random(rng);
  return m;
}

bool mentions(const std::vector<std::string>& report, const std::string& needle) {
  for (const auto& r : report)
    if (r.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("demo parameters validate") {
  auto f = std::make_shared<const Tower>(2, 2, 2);
  CHECK(validate(make_demo_lrs(f, Base::h, {2}, 2)).empty());
  CHECK(validate(make_demo_lrs(f, Base::q, {2, 2, 2}, 2)).empty());
  auto g = std::make_shared<const Tower>(3, 2, 3);
  const auto p = make_demo_lrs(g, Base::h, {2, 2}, 3);
  CHECK(validate(p).empty());
  CHECK(p.n() == 4);
}

TEST_CASE("validator names the violated constraint") {
  auto f = std::make_shared<const Tower>(2, 2, 2);
  const SkewRing ring(*f, Base::h);
  const std::size_t classes = ring.class_count(true);
  auto p = make_demo_lrs(f, Base::h, std::vector<std::size_t>(classes, 1), 1);
  CHECK(validate(p).empty());
  p.blocks.push_back(1);
  p.beta.push_back(f->one());
  p.a.push_back(f->subfield_generator());
  CHECK(mentions(validate(p), "conjugacy classes"));
  CHECK(mentions(validate(p), "sigma-conjugate"));

  auto z = make_demo_lrs(f, Base::h, {2}, 1);
  z.a[0] = f->zero();
  CHECK(mentions(validate(z), "a_0 is zero"));
  auto d = make_demo_lrs(f, Base::h, {2}, 1);
  d.beta[1] = d.beta[0];
  CHECK(mentions(validate(d), "dependent"));
  auto sub = make_demo_lrs(f, Base::h, {2}, 1);
  sub.beta[1] = f->generator();
  CHECK(mentions(validate(sub), "not in F_q"));
  auto big = make_demo_lrs(f, Base::h, {2}, 1);
  big.k = 3;
  CHECK(mentions(validate(big), "k=3"));
  CHECK_THROWS_AS(LrsCode{big}, std::invalid_argument);
}

TEST_CASE("encoding is F_{q^m}-linear") {
  auto f = std::make_shared<const Tower>(2, 2, 2);
  const LrsCode code(make_demo_lrs(f, Base::q, {2, 2}, 2));
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto u = random_msg(*f, 2, rng), v = random_msg(*f, 2, rng);
    const Elem c = f->random(rng);
    std::vector<Elem> w(2);
    for (int j = 0; j < 2; ++j) w[j] = f->add(f->mul(c, u[j]), v[j]);
    const auto cu = code.encode(u), cv = code.encode(v), cw = code.encode(w);
    for (std::size_t j = 0; j < code.n(); ++j)
      REQUIRE(cw.entries[j] == f->add(f->mul(c, cu.entries[j]), cv.entries[j]));
  }
}

TEST_CASE("message digits round trip") {
  const Tower f(3, 2, 2);
  Rng rng(2);
  const auto m = random_msg(f, 3, rng);
  const auto d = message_digits(f, m);
  CHECK(d.size() == 12);
  CHECK(message_from_digits(f, d) == m);
}

TEST_CASE("exhaustive minimum distance meets the Singleton bound") {
  auto f = std::make_shared<const Tower>(2, 2, 2);
  for (std::size_t k = 1; k <= 2; ++k) {
    const LrsCode code(make_demo_lrs(f, Base::h, {2}, k));
    CHECK(min_distance_exhaustive(code) == code.n() - k + 1);
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    const LrsCode code(make_demo_lrs(f, Base::q, {2, 1}, k));
    CHECK(min_distance_exhaustive(code) == code.n() - k + 1);
  }
  auto g = std::make_shared<const Tower>(3, 2, 3);
  const LrsCode c3(make_demo_lrs(g, Base::h, {2, 2}, 1));
  CHECK(min_distance_exhaustive(c3) == 4);
  const LrsCode big(make_demo_lrs(f, Base::q, {2, 2}, 4));
  CHECK_THROWS_AS(min_distance_exhaustive(big, 1000), std::length_error);
}

TEST_CASE("weight law on random messages") {
  auto f = std::make_shared<const Tower>(3, 2, 3);
  const LrsCode code(make_demo_lrs(f, Base::h, {2, 2}, 3));
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    auto m = random_msg(*f, 3, rng);
    const SkewPoly p(m);
    if (p.is_zero()) continue;
    REQUIRE(sum_rank_weight(*f, code.encode(p)) >= code.n() - static_cast<std::size_t>(p.degree()));
  }
}
