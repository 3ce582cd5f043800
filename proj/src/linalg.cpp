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

#include "sumrank/linalg.hpp"

namespace sumrank {

AffineSet AffineSet::empty(std::size_t ambient) {
  AffineSet s;
  s.empty_ = true;
  s.ambient_ = ambient;
  return s;
}

AffineSet AffineSet::whole(std::size_t ambient) {
  std::vector<DigitVec> basis;
  for (std::size_t i = 0; i < ambient; ++i) {
    DigitVec e(ambient, 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return AffineSet(DigitVec(ambient, 0), std::move(basis));
}

AffineSet AffineSet::point(DigitVec p) { return AffineSet(std::move(p), {}); }

AffineSet::AffineSet(DigitVec offset, std::vector<DigitVec> basis)
    : ambient_(offset.size()), offset_(std::move(offset)), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.size() != ambient_) throw std::invalid_argument("AffineSet: basis vector width mismatch");
}

AffineSet AffineSet::from_system(const BaseField& field, const DigitMatrix& a, std::span<const Digit> b) {
  auto sol = solve(field, a, b);
  if (!sol) return empty(a.cols());
  return AffineSet(std::move(sol->offset), std::move(sol->basis));
}

bool AffineSet::contains(const BaseField& field, std::span<const Digit> x) const {
  if (empty_ || x.size() != ambient_) return false;
  // x - offset must lie in span(basis).
  DigitMatrix m(ambient_, basis_.size(), 0);
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) m(i, j) = basis_[j][i];
  DigitVec rhs(ambient_);
  for (std::size_t i = 0; i < ambient_; ++i) rhs[i] = field.sub(x[i], offset_[i]);
  return solve(field, m, std::span<const Digit>(rhs)).has_value();
}

void AffineSet::for_each(const BaseField& field, const std::function<void(const DigitVec&)>& fn) const {
  if (empty_) return;
  const std::size_t d = basis_.size();
  std::vector<unsigned> coeff(d, 0);
  const unsigned h = field.order();
  while (true) {
    DigitVec v = offset_;
    for (std::size_t j = 0; j < d; ++j) {
      if (coeff[j] == 0) continue;
      const Digit c = static_cast<Digit>(coeff[j]);
      for (std::size_t i = 0; i < ambient_; ++i) v[i] = field.add(v[i], field.mul(c, basis_[j][i]));
    }
    fn(v);
    // Odometer with the last basis coordinate varying fastest.
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++coeff[pos] < h) break;
      coeff[pos] = 0;
      if (pos == 0) return;
    }
    if (d == 0) return;
  }
}

std::size_t AffineSet::size_if_at_most(const BaseField& field, std::size_t cap) const {
  if (empty_) return 0;
  std::size_t size = 1;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (size > cap / field.order()) throw std::length_error("affine set larger than " + std::to_string(cap));
    size *= field.order();
  }
  if (size > cap) throw std::length_error("affine set larger than " + std::to_string(cap));
  return size;
}

std::vector<DigitVec> AffineSet::enumerate(const BaseField& field, std::size_t cap) const {
  std::vector<DigitVec> out;
  out.reserve(size_if_at_most(field, cap));
  for_each(field, [&](const DigitVec& v) { out.push_back(v); });
  return out;
}

}  // namespace sumrank
