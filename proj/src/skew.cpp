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

#include "sumrank/skew.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sumrank/linalg.hpp"

namespace sumrank {

SkewPoly::SkewPoly(std::vector<Elem> coeffs) : c(std::move(coeffs)) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

SkewRing::SkewRing(const Tower& field, Base sigma) : field_(&field), sigma_(sigma) {}

SkewPoly SkewRing::add(const SkewPoly& f, const SkewPoly& g) const {
  std::vector<Elem> out(std::max(f.c.size(), g.c.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(f.coeff(i), g.coeff(i));
  return SkewPoly(std::move(out));
}

SkewPoly SkewRing::sub(const SkewPoly& f, const SkewPoly& g) const {
  std::vector<Elem> out(std::max(f.c.size(), g.c.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(f.coeff(i), g.coeff(i));
  return SkewPoly(std::move(out));
}

SkewPoly SkewRing::mul(const SkewPoly& f, const SkewPoly& g) const {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Elem> out(f.c.size() + g.c.size() - 1);
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.c.size(); ++j) {
      if (g.c[j].is_zero()) continue;
      out[i + j] = field_->add(out[i + j], field_->mul(f.c[i], sigma(g.c[j], static_cast<long long>(i))));
    }
  }
  return SkewPoly(std::move(out));
}

SkewPoly SkewRing::constant(const Elem& c) const { return SkewPoly({c}); }

SkewPoly SkewRing::x_power(std::size_t d) const {
  std::vector<Elem> out(d + 1);
  out[d] = field_->one();
  return SkewPoly(std::move(out));
}

Elem SkewRing::gen_power(const Elem& a, std::size_t i) const {
  Elem out = field_->one();
  for (std::size_t j = 0; j < i; ++j) out = field_->mul(out, sigma(a, static_cast<long long>(j)));
  return out;
}

Elem SkewRing::op_eval(const SkewPoly& f, const Elem& b, const Elem& a) const {
  // term = D_a^i(b) = sigma^i(b) N_i(a)
  Elem acc;
  Elem term = b;
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (i > 0) term = field_->mul(sigma(term), a);
    acc = field_->add(acc, field_->mul(f.c[i], term));
  }
  return acc;
}

bool SkewRing::product_rule_check(const SkewPoly& f, const SkewPoly& g, const Elem& b, const Elem& a) const {
  return op_eval(mul(f, g), b, a) == op_eval(f, op_eval(g, b, a), a);
}

SkewPoly SkewRing::frob_twist(const SkewPoly& f, long long j) const {
  std::vector<Elem> out(f.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i) out[i] = field_->frob(f.c[i], Base::q, j);
  return SkewPoly(std::move(out));
}

bool SkewRing::conjugate(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const std::uint64_t e = (field_->order() - 1) / (fixed_order() - 1);
  return field_->pow(field_->div(a, b), e) == field_->one();
}

bool SkewRing::conjugate_brute(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  for (std::uint64_t idx = 1; idx < field_->order(); ++idx) {
    const Elem c = field_->from_index(idx);
    if (field_->mul(field_->mul(sigma(c), a), field_->inv(c)) == b) return true;
  }
  return false;
}

std::uint64_t SkewRing::class_count(bool within_subfield) const {
  const std::uint64_t k1 = fixed_order() - 1;
  if (!within_subfield) return k1;
  // theta = g^{(N-1)/(q-1)} and the class of g^i is i mod (K-1).
  const std::uint64_t step = (field_->order() - 1) / (field_->q() - 1);
  return k1 / std::gcd(k1, step % k1);
}

std::vector<Elem> SkewRing::class_representatives(std::size_t count, bool within_subfield) const {
  const std::uint64_t available = class_count(within_subfield);
  if (count > available)
    throw std::invalid_argument("requested " + std::to_string(count) + " conjugacy classes but only " +
                                std::to_string(available) + " nonzero classes exist" +
                                (within_subfield ? " within F_q" : ""));
  const Elem g = within_subfield ? field_->subfield_generator() : field_->primitive();
  std::vector<Elem> reps;
  Elem cand = field_->one();
  for (std::uint64_t i = 0; reps.size() < count && i < fixed_order(); ++i) {
    if (std::none_of(reps.begin(), reps.end(), [&](const Elem& r) { return conjugate(r, cand); }))
      reps.push_back(cand);
    cand = field_->mul(cand, g);
  }
  if (reps.size() < count) throw std::logic_error("class representative search exhausted");
  return reps;
}

SkewPoly SkewRing::lagrange_interpolate(std::span<const EvalClass> classes) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].b.size() != classes[i].c.size())
      throw std::invalid_argument("interpolation class " + std::to_string(i) + ": b and c sizes differ");
    for (std::size_t j = 0; j < i; ++j)
      if (conjugate(classes[i].a, classes[j].a))
        throw std::invalid_argument("interpolation classes " + std::to_string(j) + " and " + std::to_string(i) +
                                    " are conjugate");
    if (field_->rank_over(classes[i].b, sigma_) != classes[i].b.size())
      throw std::invalid_argument("interpolation class " + std::to_string(i) +
                                  ": locations are dependent over the fixed field");
  }
  std::size_t n = 0;
  for (const auto& cl : classes) n += cl.b.size();
  if (n == 0) return {};
  Matrix<Elem> m(n, n);
  std::vector<Elem> rhs(n);
  std::size_t row = 0;
  for (const auto& cl : classes) {
    for (std::size_t j = 0; j < cl.b.size(); ++j, ++row) {
      Elem term = cl.b[j];
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) term = field_->mul(sigma(term), cl.a);
        m(row, i) = term;
      }
      rhs[row] = cl.c[j];
    }
  }
  const auto sol = solve(*field_, m, std::span<const Elem>(rhs));
  if (!sol || !sol->basis.empty()) throw std::invalid_argument("interpolation system is singular");
  return SkewPoly(sol->offset);
}

std::size_t SkewRing::root_space_dim(const SkewPoly& f, const Elem& a) const {
  const unsigned t = field_->t();
  DigitMatrix map(t, t, 0);
  for (unsigned u = 0; u < t; ++u) {
    Elem zu;
    zu.d[u] = 1;
    const Elem img = op_eval(f, zu, a);
    for (unsigned r = 0; r < t; ++r) map(r, u) = img.d[r];
  }
  const std::size_t kernel = t - rank(field_->base(), std::move(map));
  return kernel / field_->fixed_degree(sigma_);
}

bool SkewRing::root_bound_check(const SkewPoly& f, std::span<const Elem> reps) const {
  if (f.is_zero()) return false;
  std::size_t total = 0;
  for (const auto& a : reps) total += root_space_dim(f, a);
  return static_cast<long>(total) <= f.degree();
}

SkewRing::Stripped SkewRing::left_strip_x(const SkewPoly& f) const {
  if (f.is_zero()) throw std::invalid_argument("left_strip_x: zero polynomial");
  std::size_t d = 0;
  while (f.c[d].is_zero()) ++d;
  return {d, left_divide_x(f, d)};
}

std::size_t SkewRing::common_left_x(std::span<const SkewPoly> fs) const {
  std::size_t d = static_cast<std::size_t>(-1);
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    std::size_t lo = 0;
    while (f.c[lo].is_zero()) ++lo;
    d = std::min(d, lo);
  }
  return d == static_cast<std::size_t>(-1) ? 0 : d;
}

SkewPoly SkewRing::left_divide_x(const SkewPoly& f, std::size_t d) const {
  std::vector<Elem> out;
  for (std::size_t j = d; j < f.c.size(); ++j) out.push_back(sigma(f.c[j], -static_cast<long long>(d)));
  for (std::size_t j = 0; j < d && j < f.c.size(); ++j)
    if (!f.c[j].is_zero()) throw std::invalid_argument("left_divide_x: polynomial not divisible by x^d");
  return SkewPoly(std::move(out));
}

}  // namespace sumrank
