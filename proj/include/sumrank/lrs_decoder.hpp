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

#ifndef SUMRANK_LRS_DECODER_HPP
#define SUMRANK_LRS_DECODER_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "sumrank/linalg.hpp"
#include "sumrank/lrs.hpp"

namespace sumrank {

/// Q(x, y_1..y_s) = Q_0 + Q_1 y_1 + ... + Q_s y_s.
struct InterpolationPoly {
  std::size_t s = 1;
  long D = 0;
  std::vector<SkewPoly> Q;  // Q[0..s]
};

/// floor((n - k + 1) / (s + 1)).
long lrs_degree_bound(std::size_t n, std::size_t k, std::size_t s);
/// (D + 1)(s + 1) + k - 1.
std::size_t interpolation_unknowns(long D, std::size_t s, std::size_t k);
/// floor(s (n - k) / (s + 1)).
std::size_t lrs_radius(std::size_t n, std::size_t k, std::size_t s);

/// Checks 1 <= s <= m and that the code is in the subfield setting (or s = 1).
void check_decoder_params(const LrsCode& code, std::size_t s);

/// Deterministic nonzero solution of the n interpolation constraints: the
/// kernel vector whose first free variable is 1 and the others 0, unknowns
/// ordered Q_0 coefficients, then Q_1, ..., Q_s.
InterpolationPoly interpolate(const LrsCode& code, const SumRankVector& y, std::size_t s);
std::vector<Elem> interpolation_residuals(const LrsCode& code, const InterpolationPoly& Q, const SumRankVector& y);

/// Q_0 + sum_j Q_j f^{(q^{j-1})}.
SkewPoly key_equation_lhs(const SkewRing& ring, const InterpolationPoly& Q, const SkewPoly& f);
bool key_equation_holds(const SkewRing& ring, const InterpolationPoly& Q, const SkewPoly& f);

/// Solution set of the key equation in F_h^{tk} coordinates, in canonical
/// form: for each coefficient index i, offset(i) + sum_{j <= min(i,k-1)}
/// coef(i,j) x_j = 0.  Rows i < k are the canonical rows (coef(i,i) = B);
/// rows i >= k are the remaining tail equations.
class PeriodicSubspace {
 public:
  PeriodicSubspace(std::shared_ptr<const Tower> tower, std::size_t k, std::size_t strip,
                   std::vector<std::vector<DigitMatrix>> coef, std::vector<DigitVec> offsets);

  std::size_t k() const { return k_; }
  std::size_t t() const { return tower_->t(); }
  std::size_t strip() const { return strip_; }
  std::size_t equations() const { return coef_.size(); }
  const DigitMatrix& B() const { return coef_.at(0).at(0); }
  const DigitMatrix& coef(std::size_t i, std::size_t j) const { return coef_.at(i).at(j); }
  const DigitVec& offset(std::size_t i) const { return offsets_.at(i); }

  bool contains(std::span<const Digit> x) const;
  /// Stacked system M x = rhs over F_h.
  std::pair<DigitMatrix, DigitVec> system() const;
  AffineSet solution_set() const;
  std::size_t kernel_dim_h() const;
  /// dim over F_q of ker R_0.
  std::size_t step_dim_q() const;

 private:
  std::shared_ptr<const Tower> tower_;
  std::size_t k_;
  std::size_t strip_;
  std::vector<std::vector<DigitMatrix>> coef_;
  std::vector<DigitVec> offsets_;
};

PeriodicSubspace solve_key_equation(const LrsCode& code, const InterpolationPoly& Q);

struct LrsDecodeResult {
  InterpolationPoly Q;
  PeriodicSubspace P;
  /// P, or P intersected with the design product when one was given.
  AffineSet space;
  bool enumerated = false;
  std::vector<DigitVec> list;
};

/// `design` holds basis rows (over F_h^t) of H_1..H_k or is empty for the
/// unrestricted message space.  The list is enumerated when dim <= cap.
LrsDecodeResult decode_list(const LrsCode& code, const SumRankVector& y, std::size_t s,
                            std::span<const DigitMatrix> design = {}, std::size_t cap = 20);

}  // namespace sumrank

#endif  // SUMRANK_LRS_DECODER_HPP
