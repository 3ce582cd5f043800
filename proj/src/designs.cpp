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

#include "sumrank/designs.hpp"

#include <cmath>
#include <limits>

#include "sumrank/lrs_decoder.hpp"
#include "sumrank/random.hpp"

namespace sumrank {

std::size_t design_subspace_dim(std::size_t mn, double epsilon) {
  if (epsilon < 0 || epsilon > 0.5) throw std::invalid_argument("epsilon must lie in [0, 1/2]");
  const double v = (1.0 - 2.0 * epsilon) * static_cast<double>(mn);
  return static_cast<std::size_t>(std::floor(v + 1e-9));
}

namespace {

DigitMatrix random_full_rank(const BaseField& f, std::size_t rows, std::size_t cols, Rng& rng) {
  while (true) {
    DigitMatrix a(rows, cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = static_cast<Digit>(rng.below(f.order()));
    if (rank(f, a) == rows) return a;
  }
}

// F_h-basis of the F_q-span of w.
DigitMatrix fq_span_h(const Tower& tower, std::span<const Elem> w) {
  DigitMatrix out;
  const Elem& theta = tower.subfield_generator();
  for (const auto& x : w) {
    Elem cur = x;
    for (unsigned u = 0; u < tower.n(); ++u) {
      out.append_row(tower.expand_h(cur));
      cur = tower.mul(cur, theta);
    }
  }
  return out;
}

std::size_t stacked_rank(const BaseField& f, const DigitMatrix& a, const DigitMatrix& b) {
  DigitMatrix m(a.rows() + b.rows(), a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return rank(f, m);
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

SubspaceDesign random_design(const Tower& tower, std::size_t M, std::size_t s, std::size_t A, double epsilon,
                             std::uint64_t seed) {
  SubspaceDesign d;
  d.h = tower.h();
  d.n = tower.n();
  d.m = tower.m();
  d.s = s;
  d.A = A;
  d.epsilon = epsilon;
  d.seed = seed;
  const std::size_t dim = design_subspace_dim(tower.t(), epsilon);
  for (std::size_t i = 0; i < M; ++i) {
    Rng rng(derive_seed(seed, i, "design"));
    d.subspaces.push_back(random_full_rank(tower.base(), dim, tower.t(), rng));
  }
  return d;
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t m, std::size_t s) {
  if (s > m) return 0;
  // [m, s]_q via the recurrence [m, s] = [m-1, s-1] + q^s [m-1, s].
  std::vector<std::uint64_t> row(s + 1, 0);
  row[0] = 1;
  const auto max = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t mm = 1; mm <= m; ++mm) {
    for (std::size_t ss = std::min(mm, s); ss >= 1; --ss) {
      std::uint64_t qs = 1;
      for (std::size_t i = 0; i < ss; ++i) qs = sat_mul(qs, q);
      const std::uint64_t b = sat_mul(qs, row[ss]);
      row[ss] = (row[ss - 1] > max - b) ? max : row[ss - 1] + b;
    }
  }
  return row[s];
}

std::size_t intersection_dim(const Tower& tower, const DigitMatrix& H, std::span<const Elem> W) {
  const auto Wh = fq_span_h(tower, W);
  const std::size_t dh = rank(tower.base(), H);
  const std::size_t dw = rank(tower.base(), Wh);
  return dh + dw - stacked_rank(tower.base(), H, Wh);
}

DesignVerdict verify_design(const Tower& tower, const SubspaceDesign& design, std::uint64_t cap) {
  const std::uint64_t q = tower.q();
  const std::size_t m = tower.m();
  const std::size_t s = design.s;
  if (s == 0 || s > m) throw std::invalid_argument("design subspace dimension s must satisfy 1 <= s <= m");
  const std::uint64_t count = gaussian_binomial(q, m, s);
  if (count > cap)
    throw VerificationInfeasible("verification needs " + std::to_string(count) + " subspaces, cap is " +
                                 std::to_string(cap));
  const BaseField& f = tower.base();
  std::vector<std::size_t> dims;
  for (const auto& H : design.subspaces) dims.push_back(rank(f, H));

  DesignVerdict out;
  bool first = true;
  std::vector<std::size_t> piv(s);
  for (std::size_t i = 0; i < s; ++i) piv[i] = i;
  while (true) {
    // Free slots: (row, column) with column > pivot of that row and not a pivot.
    std::vector<bool> is_piv(m, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = piv[r] + 1; c < m; ++c)
        if (!is_piv[c]) slots.emplace_back(r, c);
    std::vector<std::uint64_t> val(slots.size(), 0);
    while (true) {
      std::vector<std::vector<Elem>> rows(s, std::vector<Elem>(m, tower.zero()));
      for (std::size_t r = 0; r < s; ++r) rows[r][piv[r]] = tower.one();
      for (std::size_t i = 0; i < slots.size(); ++i)
        rows[slots[i].first][slots[i].second] = tower.subfield_element(val[i]);
      std::vector<Elem> W;
      for (const auto& r : rows) W.push_back(tower.combine_q(r));
      const auto Wh = fq_span_h(tower, W);
      std::size_t sum = 0;
      for (std::size_t i = 0; i < design.subspaces.size(); ++i)
        sum += dims[i] + Wh.rows() - stacked_rank(f, design.subspaces[i], Wh);
      ++out.checked;
      if (first || sum > out.worst_sum) {
        out.worst_sum = sum;
        out.worst_W = W;
        first = false;
      }
      std::size_t i = slots.size();
      while (i > 0 && ++val[i - 1] == q) val[--i] = 0;
      if (i == 0) break;
    }
    // Next pivot combination in lexicographic order.
    std::size_t r = s;
    while (r > 0 && piv[r - 1] == m - s + (r - 1)) --r;
    if (r == 0) break;
    ++piv[r - 1];
    for (std::size_t j = r; j < s; ++j) piv[j] = piv[j - 1] + 1;
  }
  out.ok = out.worst_sum <= design.A;
  return out;
}

AffineSet intersect_periodic(const Tower& tower, const PeriodicSubspace& P, std::span<const DigitMatrix> H) {
  const std::size_t k = P.k();
  const std::size_t t = tower.t();
  if (H.size() != k) throw std::invalid_argument("design product needs one subspace per message coefficient");
  auto [m, rhs] = P.system();
  const BaseField& f = tower.base();
  for (std::size_t j = 0; j < k; ++j) {
    if (H[j].cols() != t) throw std::invalid_argument("design subspace has the wrong ambient dimension");
    for (const auto& v : kernel_basis(f, H[j])) {
      DigitVec row(k * t, 0);
      for (std::size_t c = 0; c < t; ++c) row[j * t + c] = v[c];
      m.append_row(row);
      rhs.push_back(0);
    }
  }
  return AffineSet::from_system(f, m, rhs);
}

bool in_subspace(const BaseField& field, const DigitMatrix& H, std::span<const Digit> x) {
  for (const auto& v : kernel_basis(field, H)) {
    Digit acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc = field.add(acc, field.mul(v[c], x[c]));
    if (acc != 0) return false;
  }
  return true;
}

std::vector<Elem> sample_design_message(const Tower& tower, std::span<const DigitMatrix> H, Rng& rng) {
  const BaseField& f = tower.base();
  std::vector<Elem> out;
  for (const auto& h : H) {
    DigitVec x(h.cols(), 0);
    for (std::size_t r = 0; r < h.rows(); ++r) {
      const auto c = static_cast<Digit>(rng.below(f.order()));
      for (std::size_t j = 0; j < h.cols(); ++j) x[j] = f.add(x[j], f.mul(c, h(r, j)));
    }
    out.push_back(tower.combine_h(x));
  }
  return out;
}

std::uint64_t EvasiveSet::modulus() const {
  if (!tower) throw std::logic_error("evasive set has no field");
  const long double e = static_cast<long double>(epsilon) * static_cast<long double>(k);
  const long double bits = e * std::log2(static_cast<long double>(tower->order()));
  if (bits >= 62) return std::uint64_t{1} << 62;
  const long double x = std::pow(static_cast<long double>(tower->order()), e);
  const long double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9L * std::max<long double>(1, x)) return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(r));
  return static_cast<std::uint64_t>(std::ceil(x));
}

bool EvasiveSet::contains_digits(std::span<const Digit> digits) const {
  const std::uint64_t mod = modulus();
  if (mod == 1) return true;
  return keyed_hash(seed, digits) % mod == 0;
}

bool EvasiveSet::contains(std::span<const Elem> v) const {
  if (v.size() != k) throw std::invalid_argument("evasive set membership needs k coordinates");
  std::vector<Digit> bytes;
  bytes.reserve(k * tower->t());
  for (const auto& x : v) {
    const auto d = tower->expand_h(x);
    bytes.insert(bytes.end(), d.begin(), d.end());
  }
  return contains_digits(bytes);
}

std::vector<DigitVec> intersect_evasive(const EvasiveSet& S, const AffineSet& V, std::size_t cap) {
  V.size_if_at_most(S.tower->base(), cap);
  std::vector<DigitVec> out;
  V.for_each(S.tower->base(), [&](const DigitVec& v) {
    if (S.contains_digits(v)) out.push_back(v);
  });
  return out;
}

AffineSet affine_span_qm(const Tower& tower, std::span<const Elem> offset,
                         std::span<const std::vector<Elem>> basis) {
  const std::size_t k = offset.size();
  const std::size_t t = tower.t();
  DigitVec off;
  for (const auto& x : offset) {
    const auto d = tower.expand_h(x);
    off.insert(off.end(), d.begin(), d.end());
  }
  DigitMatrix gens;
  Elem zu = tower.one();
  for (unsigned u = 0; u < t; ++u) {
    for (const auto& b : basis) {
      if (b.size() != k) throw std::invalid_argument("basis vector has the wrong length");
      DigitVec row;
      for (const auto& x : b) {
        const auto d = tower.expand_h(tower.mul(zu, x));
        row.insert(row.end(), d.begin(), d.end());
      }
      gens.append_row(row);
    }
    zu = tower.mul(zu, tower.generator());
  }
  std::vector<DigitVec> indep;
  if (gens.rows() > 0) {
    const auto piv = row_reduce(tower.base(), gens);
    for (std::size_t i = 0; i < piv.size(); ++i) indep.emplace_back(gens.row(i).begin(), gens.row(i).end());
  }
  return AffineSet(std::move(off), std::move(indep));
}

}  // namespace sumrank
