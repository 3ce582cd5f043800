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

#include "sumrank/lrs_decoder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sumrank/designs.hpp"

namespace sumrank {

long lrs_degree_bound(std::size_t n, std::size_t k, std::size_t s) {
  return static_cast<long>((n - k + 1) / (s + 1));
}

std::size_t interpolation_unknowns(long D, std::size_t s, std::size_t k) {
  return static_cast<std::size_t>(D + 1) * (s + 1) + k - 1;
}

std::size_t lrs_radius(std::size_t n, std::size_t k, std::size_t s) { return s * (n - k) / (s + 1); }

void check_decoder_params(const LrsCode& code, std::size_t s) {
  const Tower& f = code.field();
  if (s < 1 || s > f.m())
    throw std::invalid_argument("s=" + std::to_string(s) + " must satisfy 1 <= s <= m=" + std::to_string(f.m()));
  if (code.params().sigma != Base::h && s > 1)
    throw std::invalid_argument("list decoding with s > 1 needs the subfield setting sigma=h");
}

namespace {

void check_received(const LrsCode& code, const SumRankVector& y) {
  if (!(y.profile == code.params().profile()) || y.entries.size() != code.n())
    throw std::invalid_argument("received word does not match the code's block profile");
}

}  // namespace

InterpolationPoly interpolate(const LrsCode& code, const SumRankVector& y, std::size_t s) {
  check_decoder_params(code, s);
  check_received(code, y);
  const Tower& f = code.field();
  const SkewRing& ring = code.ring();
  const auto& p = code.params();
  const std::size_t n = code.n(), k = code.k();
  const long D = lrs_degree_bound(n, k, s);
  const std::size_t d0 = static_cast<std::size_t>(D) + k;  // Q_0 coefficients
  const std::size_t d1 = static_cast<std::size_t>(D) + 1;  // each Q_u
  const std::size_t unknowns = interpolation_unknowns(D, s, k);

  Matrix<Elem> sys(n, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    for (std::size_t j = 0; j < p.blocks[i]; ++j, ++row) {
      const Elem& a = p.a[i];
      Elem term = p.beta[row];
      for (std::size_t l = 0; l < d0; ++l) {
        if (l > 0) term = f.mul(ring.sigma(term), a);
        sys(row, l) = term;
      }
      for (std::size_t u = 1; u <= s; ++u) {
        term = f.frob(y.entries[row], Base::q, static_cast<long long>(u - 1));
        for (std::size_t l = 0; l < d1; ++l) {
          if (l > 0) term = f.mul(ring.sigma(term), a);
          sys(row, d0 + (u - 1) * d1 + l) = term;
        }
      }
    }
  }
  const auto kernel = kernel_basis(f, std::move(sys));
  if (kernel.empty()) throw std::logic_error("interpolation system has a trivial kernel");
  const auto& v = kernel.front();
  InterpolationPoly out;
  out.s = s;
  out.D = D;
  out.Q.emplace_back(std::vector<Elem>(v.begin(), v.begin() + d0));
  for (std::size_t u = 0; u < s; ++u)
    out.Q.emplace_back(std::vector<Elem>(v.begin() + d0 + u * d1, v.begin() + d0 + (u + 1) * d1));
  return out;
}

std::vector<Elem> interpolation_residuals(const LrsCode& code, const InterpolationPoly& Q, const SumRankVector& y) {
  check_received(code, y);
  const Tower& f = code.field();
  const SkewRing& ring = code.ring();
  const auto& p = code.params();
  std::vector<Elem> out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (std::size_t j = 0; j < p.blocks[i]; ++j, ++pos) {
      Elem r = ring.op_eval(Q.Q[0], p.beta[pos], p.a[i]);
      for (std::size_t u = 1; u <= Q.s; ++u)
        r = f.add(r, ring.op_eval(Q.Q[u], f.frob(y.entries[pos], Base::q, static_cast<long long>(u - 1)), p.a[i]));
      out.push_back(r);
    }
  return out;
}

SkewPoly key_equation_lhs(const SkewRing& ring, const InterpolationPoly& Q, const SkewPoly& f) {
  SkewPoly acc = Q.Q[0];
  for (std::size_t u = 1; u <= Q.s; ++u)
    acc = ring.add(acc, ring.mul(Q.Q[u], ring.frob_twist(f, static_cast<long long>(u - 1))));
  return acc;
}

bool key_equation_holds(const SkewRing& ring, const InterpolationPoly& Q, const SkewPoly& f) {
  return key_equation_lhs(ring, Q, f).is_zero();
}

PeriodicSubspace::PeriodicSubspace(std::shared_ptr<const Tower> tower, std::size_t k, std::size_t strip,
                                   std::vector<std::vector<DigitMatrix>> coef, std::vector<DigitVec> offsets)
    : tower_(std::move(tower)), k_(k), strip_(strip), coef_(std::move(coef)), offsets_(std::move(offsets)) {
  if (coef_.size() < k_ || offsets_.size() != coef_.size())
    throw std::invalid_argument("PeriodicSubspace: inconsistent equation count");
}

bool PeriodicSubspace::contains(std::span<const Digit> x) const {
  const BaseField& F = tower_->base();
  const std::size_t t = this->t();
  if (x.size() != t * k_) return false;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    DigitVec acc = offsets_[i];
    for (std::size_t j = 0; j < coef_[i].size(); ++j) {
      const DigitMatrix& m = coef_[i][j];
      for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = 0; c < t; ++c) acc[r] = F.add(acc[r], F.mul(m(r, c), x[j * t + c]));
    }
    if (std::any_of(acc.begin(), acc.end(), [](Digit d) { return d != 0; })) return false;
  }
  return true;
}

std::pair<DigitMatrix, DigitVec> PeriodicSubspace::system() const {
  const BaseField& F = tower_->base();
  const std::size_t t = this->t();
  DigitMatrix m(coef_.size() * t, k_ * t, 0);
  DigitVec rhs(coef_.size() * t, 0);
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    for (std::size_t r = 0; r < t; ++r) rhs[i * t + r] = F.neg(offsets_[i][r]);
    for (std::size_t j = 0; j < coef_[i].size(); ++j)
      for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = 0; c < t; ++c) m(i * t + r, j * t + c) = coef_[i][j](r, c);
  }
  return {std::move(m), std::move(rhs)};
}

AffineSet PeriodicSubspace::solution_set() const {
  const auto [m, rhs] = system();
  return AffineSet::from_system(tower_->base(), m, rhs);
}

std::size_t PeriodicSubspace::kernel_dim_h() const { return t() - rank(tower_->base(), B()); }

std::size_t PeriodicSubspace::step_dim_q() const { return kernel_dim_h() / tower_->n(); }

PeriodicSubspace solve_key_equation(const LrsCode& code, const InterpolationPoly& Q) {
  const Tower& f = code.field();
  const SkewRing& ring = code.ring();
  const std::size_t k = code.k();
  const std::size_t t = f.t();
  const std::size_t d = ring.common_left_x(Q.Q);
  std::vector<SkewPoly> g;
  for (const auto& q : Q.Q) g.push_back(ring.left_divide_x(q, d));

  long maxdeg = std::max<long>(g[0].degree(), static_cast<long>(k) - 1);
  for (std::size_t u = 1; u < g.size(); ++u)
    if (!g[u].is_zero()) maxdeg = std::max(maxdeg, g[u].degree() + static_cast<long>(k) - 1);
  const std::size_t rows = static_cast<std::size_t>(maxdeg) + 1;

  // R_w(x) = sum_u g_{u,w} x^{q^{u-1}}; coefficient i of the key equation is
  // g_{0,i} + sum_j R_{i-j}(sigma^{i-j}(f_j)).
  auto map_matrix = [&](std::size_t w) {
    DigitMatrix m(t, t, 0);
    for (std::size_t c = 0; c < t; ++c) {
      Elem zc;
      zc.d[c] = 1;
      const Elem x = ring.sigma(zc, static_cast<long long>(w));
      Elem img;
      for (std::size_t u = 1; u < g.size(); ++u) {
        const Elem coef = g[u].coeff(w);
        if (coef.is_zero()) continue;
        img = f.add(img, f.mul(coef, f.frob(x, Base::q, static_cast<long long>(u - 1))));
      }
      for (std::size_t r = 0; r < t; ++r) m(r, c) = img.d[r];
    }
    return m;
  };
  std::vector<DigitMatrix> by_shift;
  for (std::size_t w = 0; w < rows; ++w) by_shift.push_back(map_matrix(w));

  std::vector<std::vector<DigitMatrix>> coef(rows);
  std::vector<DigitVec> offsets(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j <= std::min(i, k - 1); ++j) coef[i].push_back(by_shift[i - j]);
    offsets[i] = f.expand_h(g[0].coeff(i));
  }
  return PeriodicSubspace(code.params().tower, k, d, std::move(coef), std::move(offsets));
}

LrsDecodeResult decode_list(const LrsCode& code, const SumRankVector& y, std::size_t s,
                            std::span<const DigitMatrix> design, std::size_t cap) {
  auto Q = interpolate(code, y, s);
  auto P = solve_key_equation(code, Q);
  AffineSet space = design.empty() ? P.solution_set() : intersect_periodic(code.field(), P, design);
  LrsDecodeResult out{std::move(Q), std::move(P), std::move(space), false, {}};
  if (out.space.dim() <= static_cast<long>(cap)) {
    try {
      out.list = out.space.enumerate(code.field().base(), std::size_t{1} << 20);
      out.enumerated = true;
    } catch (const std::length_error&) {
    }
  }
  return out;
}

}  // namespace sumrank
