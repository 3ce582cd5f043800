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

#ifndef SUMRANK_LRS_HPP
#define SUMRANK_LRS_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sumrank/gf.hpp"
#include "sumrank/linalg.hpp"
#include "sumrank/metric.hpp"
#include "sumrank/skew.hpp"

namespace sumrank {

/// Parameters of LRS[a, beta; n, k] over F_{q^m}[x; sigma].
///
/// sigma = h is the list-decoding setting: a and beta lie in F_q, classes are
/// taken under x -> x^h and ranks over F_h.  sigma = q is the classical code
/// with fixed field F_q.
struct LrsParams {
  std::shared_ptr<const Tower> tower;
  Base sigma = Base::h;
  std::vector<std::size_t> blocks;
  std::size_t k = 1;
  std::vector<Elem> a;
  std::vector<Elem> beta;

  std::size_t n() const;
  BlockProfile profile() const { return {blocks, sigma, 1}; }
};

/// a from class_representatives, beta_{i,j} = g^j with g the generator of
/// F_q (sigma = h) or the primitive element (sigma = q).
LrsParams make_demo_lrs(std::shared_ptr<const Tower> tower, Base sigma, std::vector<std::size_t> blocks,
                        std::size_t k);

/// One line per violated constraint; empty iff valid.
std::vector<std::string> validate(const LrsParams& params);

/// Message polynomials of degree < k as digit vectors over F_h of length t*k,
/// coefficient j at positions [j t, (j+1) t).
DigitVec message_digits(const Tower& tower, std::span<const Elem> msg);
std::vector<Elem> message_from_digits(const Tower& tower, std::span<const Digit> digits);

class LrsCode {
 public:
  /// Throws std::invalid_argument listing the violations.
  explicit LrsCode(LrsParams params);

  const LrsParams& params() const { return params_; }
  const Tower& field() const { return *params_.tower; }
  const SkewRing& ring() const { return ring_; }
  std::size_t n() const { return params_.n(); }
  std::size_t k() const { return params_.k; }

  SumRankVector encode(std::span<const Elem> msg) const;
  SumRankVector encode(const SkewPoly& f) const;

 private:
  LrsParams params_;
  SkewRing ring_;
};

/// Exact minimum sum-rank distance by enumerating all nonzero messages.
std::size_t min_distance_exhaustive(const LrsCode& code, std::uint64_t max_messages = std::uint64_t{1} << 20);

}  // namespace sumrank

#endif  // SUMRANK_LRS_HPP
