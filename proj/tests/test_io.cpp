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

#include "doctest.h"
#include "sumrank/io.hpp"
#include "sumrank/random.hpp"

using namespace sumrank;

TEST_CASE("element hex encoding") {
  const Tower f(2, 2, 2);
  CHECK(elem_to_hex(f, f.one()) == "1000");
  CHECK(elem_to_hex(f, f.generator()) == "0100");
  CHECK(elem_from_hex(f, "0100") == f.generator());
  CHECK_THROWS_AS(elem_from_hex(f, "010"), std::invalid_argument);
  CHECK_THROWS_AS(elem_from_hex(f, "0120"), std::invalid_argument);
  CHECK_THROWS_AS(elem_from_hex(f, "01x0"), std::invalid_argument);
  CHECK(digits_to_hex(16, DigitVec{15, 0, 10}) == "f0a");
  CHECK(digits_to_hex(17, DigitVec{16, 1}) == "1001");
  CHECK(digits_from_hex(17, "1001") == DigitVec{16, 1});
  CHECK_THROWS_AS(digits_from_hex(17, "11"), std::invalid_argument);
  const Tower g(5, 1, 2);
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const Elem x = g.random(rng);
    CHECK(elem_from_hex(g, elem_to_hex(g, x)) == x);
  }
}

TEST_CASE("parameter files round trip") {
  auto f = std::make_shared<const Tower>(2, 2, 6);
  const auto lp = make_demo_lrs(f, Base::q, {3, 3}, 2);
  const auto lj = to_json(lp);
  CHECK(kind_of(lj) == "lrs");
  const auto lb = lrs_params_from_json(Json::parse(lj.dump()));
  CHECK(lb.a == lp.a);
  CHECK(lb.beta == lp.beta);
  CHECK(lb.blocks == lp.blocks);
  CHECK(lb.sigma == lp.sigma);
  CHECK(lb.tower->modulus() == f->modulus());

  auto fp = make_demo_flrs(f, 3, 2, 2, 2);
  fp.epsilon = 0.25;
  fp.evasive_seed = 0xdeadbeefcafeULL;
  const auto fb = flrs_params_from_json(Json::parse(to_json(fp).dump()));
  CHECK(fb.gamma == fp.gamma);
  CHECK(fb.a == fp.a);
  CHECK(fb.evasive_seed == fp.evasive_seed);
  CHECK(fb.epsilon == 0.25);
  auto bad = to_json(fp);
  bad["N"] = 5;
  CHECK_THROWS_AS(flrs_params_from_json(bad), std::invalid_argument);
  auto missing = to_json(fp);
  missing.erase("gamma");
  CHECK_THROWS_AS(flrs_params_from_json(missing), std::invalid_argument);

  const auto d = random_design(*f, 3, 2, 10, 0.25, 4);
  const auto db = design_from_json(Json::parse(to_json(*f, d).dump()));
  REQUIRE(db.subspaces.size() == 3);
  CHECK(db.subspaces[2] == d.subspaces[2]);
  CHECK(db.A == 10);
  CHECK(db.seed == 4);

  const EvasiveSet S{f, 4, 0.5, 77};
  const auto Sb = evasive_from_json(Json::parse(to_json(S).dump()));
  CHECK(Sb.modulus() == S.modulus());
  CHECK(Sb.seed == 77);

  auto wrong = tower_to_json(*f);
  wrong["modulus"] = "1000000000001";
  CHECK_THROWS(tower_from_json(wrong));
}
