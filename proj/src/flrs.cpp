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

#include "sumrank/flrs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sumrank {

FlrsParams make_demo_flrs(std::shared_ptr<const Tower> tower, std::size_t lambda, std::size_t ell, std::size_t eta,
                          std::size_t k) {
  FlrsParams p;
  p.tower = std::move(tower);
  p.lambda = lambda;
  p.ell = ell;
  p.eta = eta;
  p.k = k;
  p.gamma = p.tower->primitive();
  p.a = SkewRing(*p.tower, Base::q).class_representatives(ell, false);
  return p;
}

std::vector<std::string> validate(const FlrsParams& p) {
  if (!p.tower) return {"no field tower"};
  const Tower& f = *p.tower;
  const SkewRing ring(f, Base::q);
  std::vector<std::string> out;
  if (p.lambda < 1) out.push_back("lambda must be at least 1");
  if (p.ell < 1) out.push_back("at least one class is required");
  if (p.eta < 1) out.push_back("eta must be at least 1");
  if (p.k < 1 || p.k > p.n())
    out.push_back("k=" + std::to_string(p.k) + " must satisfy 1 <= k <= n=" + std::to_string(p.n()));
  if (p.lambda * p.eta > f.m())
    out.push_back("lambda*eta=" + std::to_string(p.lambda * p.eta) + " exceeds m=" + std::to_string(f.m()) +
                  ": the points of a block are dependent over F_q");
  const std::uint64_t classes = ring.class_count(false);
  if (p.ell > classes)
    out.push_back("l=" + std::to_string(p.ell) + " exceeds the " + std::to_string(classes) +
                  " nonzero conjugacy classes");
  if (p.gamma.is_zero() || f.multiplicative_order(p.gamma) != f.order() - 1) out.push_back("gamma is not primitive");
  if (p.a.size() != p.ell) {
    out.push_back("expected " + std::to_string(p.ell) + " class representatives a, got " + std::to_string(p.a.size()));
  } else {
    for (std::size_t i = 0; i < p.ell; ++i) {
      if (p.a[i].is_zero()) out.push_back("a_" + std::to_string(i) + " is zero");
      for (std::size_t j = 0; j < i; ++j)
        if (ring.conjugate(p.a[i], p.a[j]))
          out.push_back("a_" + std::to_string(j) + " and a_" + std::to_string(i) + " are sigma-conjugate");
    }
  }
  if (p.epsilon < 0 || p.epsilon > 1) out.push_back("epsilon must lie in [0, 1]");
  return out;
}

std::vector<std::string> warnings(const FlrsParams& p) {
  std::vector<std::string> out;
  if (!p.tower) return out;
  const std::size_t m = p.tower->m(), n = p.n();
  if (4 * m < n || m > 4 * n)
    out.push_back("m=" + std::to_string(m) + " is far from n=" + std::to_string(n) +
                  "; complexity estimates assume m = Theta(n)");
  return out;
}

namespace {

const FlrsParams& checked(const FlrsParams& p) {
  const auto report = validate(p);
  if (report.empty()) return p;
  std::ostringstream msg;
  msg << "invalid FLRS parameters:";
  for (const auto& r : report) msg << "\n  " << r;
  throw std::invalid_argument(msg.str());
}

}  // namespace

FlrsCode::FlrsCode(FlrsParams params) : params_(checked(params)), ring_(*params_.tower, Base::q) {
  Elem g = field().one();
  for (std::size_t i = 0; i < params_.lambda * params_.eta; ++i) {
    points_.push_back(g);
    g = field().mul(g, params_.gamma);
  }
}

SumRankVector FlrsCode::encode(std::span<const Elem> msg) const {
  if (msg.size() != params_.k)
    throw std::invalid_argument("message has " + std::to_string(msg.size()) + " coefficients, expected k=" +
                                std::to_string(params_.k));
  return encode(SkewPoly(std::vector<Elem>(msg.begin(), msg.end())));
}

SumRankVector FlrsCode::encode(const SkewPoly& f) const {
  if (f.degree() >= static_cast<long>(params_.k)) throw std::invalid_argument("message degree must be < k");
  const auto prof = params_.profile();
  SumRankVector out = zero_vector(prof);
  for (std::size_t i = 0; i < params_.ell; ++i)
    for (std::size_t c = 0; c < params_.eta; ++c)
      for (std::size_t r = 0; r < params_.lambda; ++r)
        out.entries[prof.index(i, c, r)] = ring_.op_eval(f, point(c, r), params_.a[i]);
  return out;
}

long flrs_degree_bound(std::size_t n, std::size_t lambda, std::size_t k, std::size_t s) {
  const long x = static_cast<long>(n * (lambda - s + 1)) - static_cast<long>(k) + 1;
  return x < 0 ? -1 : x / static_cast<long>(s + 1);
}

std::size_t flrs_radius(std::size_t n, std::size_t lambda, std::size_t k, std::size_t s) {
  const long x = static_cast<long>(n * (lambda - s + 1)) - static_cast<long>(k) + 1;
  if (x <= 0) return 0;
  return static_cast<std::size_t>(s * static_cast<std::size_t>(x) / ((s + 1) * (lambda - s + 1)));
}

std::size_t flrs_constraint_count(std::size_t n, std::size_t lambda, std::size_t s) { return n * (lambda - s + 1); }

std::size_t flrs_dimension_bound(std::size_t k, std::size_t m, std::size_t s) { return (k + m - 1) / m * (s - 1); }

void check_flrs_decoder_params(const FlrsCode& code, std::size_t s) {
  const auto& p = code.params();
  if (s < 1 || s > p.lambda)
    throw std::invalid_argument("s=" + std::to_string(s) + " must satisfy 1 <= s <= lambda=" +
                                std::to_string(p.lambda));
  if (flrs_degree_bound(p.n(), p.lambda, p.k, s) < 0)
    throw std::invalid_argument("s=" + std::to_string(s) + " leaves fewer interpolation constraints than k-1");
}

namespace {

void check_received(const FlrsCode& code, const SumRankVector& y) {
  if (!(y.profile == code.params().profile()) || y.entries.size() != code.params().N())
    throw std::invalid_argument("received word does not match the code's folded profile");
}

}  // namespace

InterpolationPoly flrs_interpolate(const FlrsCode& code, const SumRankVector& y, std::size_t s) {
  check_flrs_decoder_params(code, s);
  check_received(code, y);
  const Tower& f = code.field();
  const SkewRing& ring = code.ring();
  const auto& p = code.params();
  const auto prof = p.profile();
  const long D = flrs_degree_bound(p.n(), p.lambda, p.k, s);
  const std::size_t d0 = static_cast<std::size_t>(D) + p.k;
  const std::size_t d1 = static_cast<std::size_t>(D) + 1;
  const std::size_t unknowns = interpolation_unknowns(D, s, p.k);
  const std::size_t windows = p.lambda - s + 1;

  Matrix<Elem> sys(flrs_constraint_count(p.n(), p.lambda, s), unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < p.ell; ++i)
    for (std::size_t c = 0; c < p.eta; ++c)
      for (std::size_t j = 0; j < windows; ++j, ++row) {
        const Elem& a = p.a[i];
        Elem term = code.point(c, j);
        for (std::size_t l = 0; l < d0; ++l) {
          if (l > 0) term = f.mul(ring.sigma(term), a);
          sys(row, l) = term;
        }
        for (std::size_t u = 1; u <= s; ++u) {
          term = y.entries[prof.index(i, c, j + u - 1)];
          for (std::size_t l = 0; l < d1; ++l) {
            if (l > 0) term = f.mul(ring.sigma(term), a);
            sys(row, d0 + (u - 1) * d1 + l) = term;
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

std::vector<Elem> flrs_interpolation_residuals(const FlrsCode& code, const InterpolationPoly& Q,
                                               const SumRankVector& y) {
  check_received(code, y);
  const Tower& f = code.field();
  const auto& p = code.params();
  const auto prof = p.profile();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < p.ell; ++i)
    for (std::size_t c = 0; c < p.eta; ++c)
      for (std::size_t j = 0; j + Q.s <= p.lambda; ++j) {
        Elem r = code.ring().op_eval(Q.Q[0], code.point(c, j), p.a[i]);
        for (std::size_t u = 1; u <= Q.s; ++u)
          r = f.add(r, code.ring().op_eval(Q.Q[u], y.entries[prof.index(i, c, j + u - 1)], p.a[i]));
        out.push_back(r);
      }
  return out;
}

SkewPoly flrs_key_equation_lhs(const FlrsCode& code, const InterpolationPoly& Q, const SkewPoly& f) {
  const SkewRing& ring = code.ring();
  SkewPoly acc = Q.Q[0];
  Elem g = code.field().one();
  for (std::size_t u = 1; u <= Q.s; ++u) {
    acc = ring.add(acc, ring.mul(Q.Q[u], ring.mul(f, ring.constant(g))));
    g = code.field().mul(g, code.params().gamma);
  }
  return acc;
}

bool flrs_key_equation_holds(const FlrsCode& code, const InterpolationPoly& Q, const SkewPoly& f) {
  return flrs_key_equation_lhs(code, Q, f).is_zero();
}

namespace {

// offset + sum_j p_j cols[j] with p_j in F_h.
struct AffineForm {
  Elem offset;
  std::vector<Elem> cols;
};

void axpy(const Tower& f, AffineForm& acc, const Elem& c, const AffineForm& x, long long w, Base b) {
  acc.offset = f.add(acc.offset, f.mul(c, f.frob(x.offset, b, w)));
  if (acc.cols.size() < x.cols.size()) acc.cols.resize(x.cols.size());
  for (std::size_t j = 0; j < x.cols.size(); ++j)
    if (!x.cols[j].is_zero()) acc.cols[j] = f.add(acc.cols[j], f.mul(c, f.frob(x.cols[j], b, w)));
}

Elem horner(const Tower& f, std::span<const Elem> coeffs, const Elem& x) {
  Elem acc;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
  return acc;
}

}  // namespace

std::vector<Elem> flrs_r0(const FlrsCode& code, const InterpolationPoly& Q) {
  const SkewRing& ring = code.ring();
  const std::size_t d = ring.common_left_x(Q.Q);
  std::vector<Elem> out;
  for (std::size_t u = 1; u < Q.Q.size(); ++u) out.push_back(ring.left_divide_x(Q.Q[u], d).coeff(0));
  return out;
}

FlrsSolution flrs_solve(const FlrsCode& code, const InterpolationPoly& Q) {
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

  auto R = [&](std::size_t w, const Elem& x) {
    std::vector<Elem> c;
    for (std::size_t u = 1; u < g.size(); ++u) c.push_back(g[u].coeff(w));
    return horner(f, c, x);
  };

  FlrsSolution out;
  out.strip = d;
  std::vector<AffineForm> fr(k);
  std::vector<AffineForm> constraints;
  std::size_t params = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const Elem sr = ring.sigma(code.params().gamma, static_cast<long long>(r));
    AffineForm expr{g[0].coeff(r), {}};
    for (std::size_t w = 1; w <= r; ++w) {
      const std::size_t j = r - w;
      if (j >= k) continue;
      const Elem c = R(w, sr);
      if (!c.is_zero()) axpy(f, expr, c, fr[j], static_cast<long long>(w), Base::q);
    }
    if (r >= k) {
      constraints.push_back(std::move(expr));
      continue;
    }
    const Elem c0 = R(0, sr);
    if (!c0.is_zero()) {
      AffineForm v{};
      axpy(f, v, f.neg(f.inv(c0)), expr, 0, Base::q);
      fr[r] = std::move(v);
    } else {
      out.free_indices.push_back(r);
      AffineForm v{};
      v.cols.assign(params + t, Elem{});
      for (std::size_t u = 0; u < t; ++u) v.cols[params + u].d[u] = 1;
      params += t;
      fr[r] = std::move(v);
      constraints.push_back(std::move(expr));
    }
  }

  const BaseField& F = f.base();
  DigitMatrix sys(constraints.size() * t, params, 0);
  DigitVec rhs(constraints.size() * t, 0);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    for (std::size_t r = 0; r < t; ++r) rhs[i * t + r] = F.neg(c.offset.d[r]);
    for (std::size_t j = 0; j < c.cols.size(); ++j)
      for (std::size_t r = 0; r < t; ++r) sys(i * t + r, j) = c.cols[j].d[r];
  }
  AffineSet pset = AffineSet::whole(params);
  if (!constraints.empty()) {
    if (params == 0) {
      const bool ok = std::all_of(rhs.begin(), rhs.end(), [](Digit x) { return x == 0; });
      pset = ok ? AffineSet::point({}) : AffineSet::empty(0);
    } else {
      pset = AffineSet::from_system(F, sys, rhs);
    }
  }
  if (pset.is_empty()) {
    out.space = AffineSet::empty(k * t);
    return out;
  }
  // Message digits are an injective affine image of the parameters.
  auto image = [&](std::span<const Digit> p, bool with_offset) {
    DigitVec x(k * t, 0);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t u = 0; u < t; ++u) x[r * t + u] = with_offset ? fr[r].offset.d[u] : 0;
      for (std::size_t j = 0; j < fr[r].cols.size(); ++j) {
        if (p[j] == 0) continue;
        for (std::size_t u = 0; u < t; ++u) x[r * t + u] = F.add(x[r * t + u], F.mul(p[j], fr[r].cols[j].d[u]));
      }
    }
    return x;
  };
  DigitVec off = image(pset.offset(), true);
  std::vector<DigitVec> basis;
  for (const auto& b : pset.basis()) basis.push_back(image(b, false));
  out.space = AffineSet(std::move(off), std::move(basis));
  return out;
}

FlrsDecodeResult flrs_decode_list(const FlrsCode& code, const SumRankVector& y, std::size_t s, std::size_t cap) {
  auto Q = flrs_interpolate(code, y, s);
  auto sol = flrs_solve(code, Q);
  FlrsDecodeResult out{std::move(Q), std::move(sol), std::nullopt};
  try {
    out.list = intersect_evasive(code.evasive_set(), out.solution.space, cap);
  } catch (const std::length_error&) {
  }
  return out;
}

}  // namespace sumrank
