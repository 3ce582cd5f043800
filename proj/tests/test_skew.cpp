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

#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "sumrank/random.hpp"
#include "sumrank/skew.hpp"

using namespace sumrank;

namespace {

SkewPoly random_poly(const Tower& f, std::size_t deg, Rng& rng) {
  std::vector<Elem> c(deg + 1);
  for (auto& x : c) x = f.random(rng);
  while (c.back().is_zero()) c.back() = f.random(rng);
  return SkewPoly(c);
}

}  // namespace

TEST_CASE("multiplication") {
  const Tower f(2, 2, 2);
  for (Base b : {Base::h, Base::q}) {
    const SkewRing r(f, b);
    Rng rng(1);
    const Elem c = f.random(rng);
    const SkewPoly x = r.x_power(1);
    CHECK(r.mul(x, r.constant(c)) == SkewPoly({Elem{}, r.sigma(c)}));
    CHECK(r.mul(x, SkewPoly{}).is_zero());
    for (int i = 0; i < 300; ++i) {
      const auto p = random_poly(f, rng.below(4), rng), q = random_poly(f, rng.below(4), rng),
                 s = random_poly(f, rng.below(4), rng);
      REQUIRE(r.mul(p, r.mul(q, s)) == r.mul(r.mul(p, q), s));
      REQUIRE(r.mul(p, r.add(q, s)) == r.add(r.mul(p, q), r.mul(p, s)));
      REQUIRE(r.mul(p, q).degree() == p.degree() + q.degree());
    }
  }
  const SkewRing r(f, Base::h);
  Rng rng(5);
  bool noncommuting = false;
  for (int i = 0; i < 20; ++i) {
    const auto p = random_poly(f, 2, rng), q = random_poly(f, 2, rng);
    noncommuting |= !(r.mul(p, q) == r.mul(q, p));
  }
  CHECK(noncommuting);
}

TEST_CASE("generalized power and operator evaluation") {
  const Tower f(3, 2, 2);
  const SkewRing r(f, Base::h);
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Elem a = f.random(rng), b = f.random(rng), c = f.random(rng);
    REQUIRE(r.gen_power(a, 0) == f.one());
    REQUIRE(r.gen_power(a, 1) == a);
    REQUIRE(r.gen_power(a, 2) == f.mul(a, f.pow(a, 3)));
    REQUIRE(r.op_eval(r.constant(c), b, a) == f.mul(c, b));
    REQUIRE(r.op_eval(r.x_power(1), b, a) == f.mul(f.pow(b, 3), a));
    // direct sum oracle
    const auto p = random_poly(f, 3, rng);
    Elem direct;
    for (std::size_t k = 0; k < p.c.size(); ++k)
      direct = f.add(direct, f.mul(p.c[k], f.mul(f.pow(b, static_cast<std::uint64_t>(std::pow(3, k))), r.gen_power(a, k))));
    REQUIRE(r.op_eval(p, b, a) == direct);
  }
}

TEST_CASE("operator evaluation is linear over the fixed field") {
  const Tower f(2, 2, 3);
  for (Base base : {Base::h, Base::q}) {
    const SkewRing r(f, base);
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
      const auto p = random_poly(f, rng.below(5), rng);
      const Elem a = f.random(rng), b1 = f.random(rng), b2 = f.random(rng);
      const Elem s1 = f.random_in(base, rng), s2 = f.random_in(base, rng);
      REQUIRE(r.op_eval(p, f.add(f.mul(s1, b1), f.mul(s2, b2)), a) ==
              f.add(f.mul(s1, r.op_eval(p, b1, a)), f.mul(s2, r.op_eval(p, b2, a))));
    }
  }
}

TEST_CASE("product rule") {
  const Tower f(2, 2, 2);
  for (Base base : {Base::h, Base::q}) {
    const SkewRing r(f, base);
    Rng rng(4);
    CHECK(r.product_rule_check(r.constant(f.one()), r.constant(f.one()), f.random(rng), f.random(rng)));
    for (int i = 0; i < 1000; ++i) {
      const auto p = random_poly(f, rng.below(5), rng), q = random_poly(f, rng.below(5), rng);
      REQUIRE(r.product_rule_check(p, q, f.random(rng), f.random(rng)));
    }
    // x * x: both sides sigma^2(b) sigma(a) a
    const Elem a = f.random(rng), b = f.random(rng);
    const Elem expect = f.mul(f.mul(r.sigma(b, 2), r.sigma(a)), a);
    CHECK(r.op_eval(r.mul(r.x_power(1), r.x_power(1)), b, a) == expect);
    CHECK(r.op_eval(r.x_power(1), r.op_eval(r.x_power(1), b, a), a) == expect);
  }
}

TEST_CASE("Frobenius twist commutes with evaluation at subfield points") {
  for (auto [h, n, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 2}, {3, 2, 2}, {2, 3, 2}}) {
    const Tower f(h, n, m);
    const SkewRing r(f, Base::h);
    Rng rng(h + n + m);
    for (int i = 0; i < 300; ++i) {
      const auto p = random_poly(f, rng.below(5), rng);
      const Elem a = f.random_in(Base::q, rng), b = f.random_in(Base::q, rng);
      const long long j = static_cast<long long>(rng.below(m + 1));
      REQUIRE(r.op_eval(r.frob_twist(p, j), b, a) == f.frob(r.op_eval(p, b, a), Base::q, j));
    }
    CHECK(r.frob_twist(random_poly(f, 3, rng), 0).degree() == 3);
    std::vector<Elem> sub(4);
    for (auto& x : sub) x = f.random_in(Base::q, rng);
    CHECK(r.frob_twist(SkewPoly(sub), 1) == SkewPoly(sub));
  }
}

TEST_CASE("conjugacy agrees with brute force") {
  const Tower f(2, 2, 2);
  for (Base base : {Base::h, Base::q}) {
    const SkewRing r(f, base);
    for (std::uint64_t i = 0; i < f.order(); ++i)
      for (std::uint64_t j = 0; j < f.order(); ++j) {
        const Elem a = f.from_index(i), b = f.from_index(j);
        REQUIRE(r.conjugate(a, b) == r.conjugate_brute(a, b));
      }
  }
  const SkewRing rq(f, Base::q);
  CHECK_FALSE(rq.conjugate(f.one(), f.primitive()));
  CHECK(rq.conjugate(f.primitive(), f.primitive()));
  // exhaustive classification of F_16^* under x -> x^4
  std::vector<Elem> classes;
  for (std::uint64_t i = 1; i < f.order(); ++i) {
    const Elem a = f.from_index(i);
    bool seen = false;
    for (const auto& c : classes) seen |= rq.conjugate_brute(c, a);
    if (!seen) classes.push_back(a);
  }
  CHECK(classes.size() == 3);
  CHECK(rq.class_count(false) == 3);
  const auto reps = rq.class_representatives(3);
  CHECK(reps[0] == f.one());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(rq.conjugate(reps[i], reps[j]));
  CHECK_THROWS_AS(rq.class_representatives(4), std::invalid_argument);
  CHECK(rq.class_representatives(1) == std::vector<Elem>{f.one()});
}

TEST_CASE("class counts within the subfield") {
  // h = 3, n = 2, m = 2: theta^i has class i*(1+q) mod 2 = 0, so one class
  const Tower f(3, 2, 2);
  const SkewRing r(f, Base::h);
  std::set<std::size_t> seen;
  std::vector<Elem> found;
  for (std::uint64_t i = 1; i < f.q(); ++i) {
    const Elem a = f.subfield_element(i);
    bool dup = false;
    for (const auto& c : found) dup |= r.conjugate_brute(c, a);
    if (!dup) found.push_back(a);
  }
  CHECK(r.class_count(true) == found.size());
  const Tower g(3, 2, 3);
  const SkewRing rg(g, Base::h);
  CHECK(rg.class_count(true) == 2);
  const auto reps = rg.class_representatives(2, true);
  for (const auto& a : reps) CHECK(g.in_subfield(a));
  CHECK_FALSE(rg.conjugate(reps[0], reps[1]));
}

TEST_CASE("Lagrange interpolation") {
  const Tower f(2, 2, 2);
  const SkewRing r(f, Base::q);
  Rng rng(8);
  const auto reps = r.class_representatives(2);
  const Elem g = f.primitive();
  std::vector<EvalClass> cls(2);
  for (int i = 0; i < 2; ++i) {
    cls[i].a = reps[i];
    cls[i].b = {f.one(), g};
    cls[i].c = {f.zero(), f.zero()};
  }
  CHECK(r.lagrange_interpolate(cls).is_zero());
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(f, 3, rng);
    for (auto& cl : cls)
      for (std::size_t j = 0; j < 2; ++j) cl.c[j] = r.op_eval(p, cl.b[j], cl.a);
    REQUIRE(r.lagrange_interpolate(cls) == p);
  }
  const Elem b = f.random(rng), c = f.random(rng);
  std::vector<EvalClass> single{{f.one(), {b.is_zero() ? f.one() : b}, {c}}};
  CHECK(r.lagrange_interpolate(single) == r.constant(f.div(c, single[0].b[0])));
  std::vector<EvalClass> dependent{{f.one(), {f.one(), f.subfield_generator()}, {c, c}}};
  CHECK_THROWS_AS(r.lagrange_interpolate(dependent), std::invalid_argument);
  std::vector<EvalClass> conj{{f.one(), {f.one()}, {c}}, {f.one(), {g}, {c}}};
  CHECK_THROWS_AS(r.lagrange_interpolate(conj), std::invalid_argument);
}

TEST_CASE("root bound against exhaustive root enumeration") {
  const Tower f(2, 2, 2);
  const SkewRing r(f, Base::q);
  const auto reps = r.class_representatives(3);
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(f, rng.below(4), rng);
    std::size_t total = 0;
    for (const auto& a : reps) {
      std::size_t roots = 0;
      for (std::uint64_t i = 0; i < f.order(); ++i)
        if (r.op_eval(p, f.from_index(i), a).is_zero()) ++roots;
      // roots form an F_4-space
      std::size_t dim = 0;
      for (std::size_t s = 1; s < roots; s *= 4) ++dim;
      REQUIRE(r.root_space_dim(p, a) == dim);
      total += dim;
    }
    REQUIRE(static_cast<long>(total) <= p.degree());
    REQUIRE(r.root_bound_check(p, reps));
    if (p.degree() == 0) REQUIRE(total == 0);
  }
  // equality: the minimal polynomial vanishing on {1, g} in class 1 and {1} in class g
  std::vector<EvalClass> cls{{reps[0], {f.one(), f.primitive()}, {}}, {reps[1], {f.one()}, {}}};
  const auto ann = r.lagrange_interpolate(std::vector<EvalClass>{
      {reps[0], {f.one(), f.primitive()}, {f.zero(), f.zero()}}, {reps[1], {f.one()}, {f.zero()}},
      {reps[2], {f.one()}, {f.one()}}});
  CHECK(ann.degree() <= 3);
  CHECK(r.root_space_dim(ann, reps[0]) == 2);
  CHECK(r.root_space_dim(ann, reps[1]) >= 1);
}

TEST_CASE("left stripping") {
  const Tower f(2, 3, 2);
  const SkewRing r(f, Base::h);
  Rng rng(10);
  const auto p = random_poly(f, 3, rng);
  std::vector<Elem> c = p.c;
  c[0] = f.random(rng);
  if (c[0].is_zero()) c[0] = f.one();
  CHECK(r.left_strip_x(SkewPoly(c)).d == 0);
  const Elem k = f.random(rng).is_zero() ? f.one() : f.primitive();
  const auto s = r.left_strip_x(SkewPoly({Elem{}, k}));
  CHECK(s.d == 1);
  CHECK(s.g == r.constant(r.sigma(k, -1)));
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = rng.below(4);
    const auto g = random_poly(f, rng.below(4), rng);
    std::vector<Elem> gc = g.c;
    if (gc[0].is_zero()) gc[0] = f.one();
    const auto fpoly = r.mul(r.x_power(d), SkewPoly(gc));
    const auto st = r.left_strip_x(fpoly);
    REQUIRE(st.d == d);
    REQUIRE(r.mul(r.x_power(st.d), st.g) == fpoly);
  }
}
