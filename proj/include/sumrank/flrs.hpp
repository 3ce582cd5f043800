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

#ifndef SUMRANK_FLRS_HPP
#define SUMRANK_FLRS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumrank/designs.hpp"
#include "sumrank/linalg.hpp"
#include "sumrank/lrs_decoder.hpp"
#include "sumrank/metric.hpp"
#include "sumrank/skew.hpp"

namespace sumrank {

/// lambda-folded LRS code over F_{q^m}[x; x^q]: l classes, eta folded
/// columns per class, n = l eta columns in total.  Entry (r, c) of block i
/// is f(gamma^{c lambda + r})_{a_i}.
struct FlrsParams {
  std::shared_ptr<const Tower> tower;
  std::size_t lambda = 1;
  std::size_t ell = 1;
  std::size_t eta = 1;
  std::size_t k = 1;
  Elem gamma;
  std::vector<Elem> a;
  double epsilon = 0;
  std::uint64_t evasive_seed = 0;

  std::size_t n() const { return ell * eta; }
  std::size_t N() const { return lambda * n(); }
  BlockProfile profile() const { return {std::vector<std::size_t>(ell, eta), Base::q, lambda}; }
};

FlrsParams make_demo_flrs(std::shared_ptr<const Tower> tower, std::size_t lambda, std::size_t ell, std::size_t eta,
                          std::size_t k);

std::vector<std::string> validate(const FlrsParams& params);
/// Regime notes that do not invalidate the parameters.
std::vector<std::string> warnings(const FlrsParams& params);

class FlrsCode {
 public:
  explicit FlrsCode(FlrsParams params);

  const FlrsParams& params() const { return params_; }
  const Tower& field() const { return *params_.tower; }
  const SkewRing& ring() const { return ring_; }
  std::size_t n() const { return params_.n(); }
  std::size_t k() const { return params_.k; }
  /// gamma^{c lambda + r}.
  const Elem& point(std::size_t col, std::size_t row) const { return points_.at(col * params_.lambda + row); }

  SumRankVector encode(std::span<const Elem> msg) const;
  SumRankVector encode(const SkewPoly& f) const;
  EvasiveSet evasive_set() const { return {params_.tower, params_.k, params_.epsilon, params_.evasive_seed}; }

 private:
  FlrsParams params_;
  SkewRing ring_;
  std::vector<Elem> points_;
};

/// floor((n (lambda - s + 1) - k + 1) / (s + 1)).
long flrs_degree_bound(std::size_t n, std::size_t lambda, std::size_t k, std::size_t s);
/// floor(s/(s+1) * (n (lambda - s + 1) - k + 1) / (lambda - s + 1)).
std::size_t flrs_radius(std::size_t n, std::size_t lambda, std::size_t k, std::size_t s);
/// n (lambda - s + 1).
std::size_t flrs_constraint_count(std::size_t n, std::size_t lambda, std::size_t s);
/// ceil(k/m) (s - 1).
std::size_t flrs_dimension_bound(std::size_t k, std::size_t m, std::size_t s);

void check_flrs_decoder_params(const FlrsCode& code, std::size_t s);

InterpolationPoly flrs_interpolate(const FlrsCode& code, const SumRankVector& y, std::size_t s);
std::vector<Elem> flrs_interpolation_residuals(const FlrsCode& code, const InterpolationPoly& Q,
                                               const SumRankVector& y);

/// Q_0 + sum_u Q_u f gamma^{u-1}.
SkewPoly flrs_key_equation_lhs(const FlrsCode& code, const InterpolationPoly& Q, const SkewPoly& f);
bool flrs_key_equation_holds(const FlrsCode& code, const InterpolationPoly& Q, const SkewPoly& f);

struct FlrsSolution {
  std::size_t strip = 0;
  /// r < k with R_0(sigma^r(gamma)) = 0.
  std::vector<std::size_t> free_indices;
  /// Satisfier set in message digit coordinates F_h^{tk}.
  AffineSet space = AffineSet::empty(0);
};

/// R_0(x) = sum_i q_{i,0} x^{i-1} after stripping, as coefficients.
std::vector<Elem> flrs_r0(const FlrsCode& code, const InterpolationPoly& Q);

FlrsSolution flrs_solve(const FlrsCode& code, const InterpolationPoly& Q);

struct FlrsDecodeResult {
  InterpolationPoly Q;
  FlrsSolution solution;
  /// Set when the evasive intersection was feasible to enumerate.
  std::optional<std::vector<DigitVec>> list;
};

FlrsDecodeResult flrs_decode_list(const FlrsCode& code, const SumRankVector& y, std::size_t s,
                                  std::size_t cap = 1000000);

}  // namespace sumrank

#endif  // SUMRANK_FLRS_HPP
