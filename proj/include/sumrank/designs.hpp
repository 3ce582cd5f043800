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

#ifndef SUMRANK_DESIGNS_HPP
#define SUMRANK_DESIGNS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "sumrank/gf.hpp"
#include "sumrank/linalg.hpp"

namespace sumrank {

class PeriodicSubspace;
class Rng;

/// Raised when an exhaustive check would exceed its enumeration budget.
class VerificationInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subspaces H_1..H_M of F_h^{mn} (identified with F_{q^m} through the
/// polynomial basis), each stored as independent basis rows.
struct SubspaceDesign {
  unsigned h = 2;
  unsigned n = 1;
  unsigned m = 1;
  std::size_t s = 1;
  std::size_t A = 0;
  double epsilon = 0;
  std::uint64_t seed = 0;
  std::vector<DigitMatrix> subspaces;

  std::size_t ambient() const { return static_cast<std::size_t>(n) * m; }
};

/// floor((1 - 2 eps) mn).
std::size_t design_subspace_dim(std::size_t mn, double epsilon);

SubspaceDesign random_design(const Tower& tower, std::size_t M, std::size_t s, std::size_t A, double epsilon,
                             std::uint64_t seed);

/// Number of s-dimensional subspaces of F_q^m (saturates at UINT64_MAX).
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t m, std::size_t s);

struct DesignVerdict {
  bool ok = false;
  std::size_t worst_sum = 0;
  /// Basis of the first W (in enumeration order) attaining worst_sum, as
  /// elements of F_{q^m} = F_q^m.
  std::vector<Elem> worst_W;
  std::uint64_t checked = 0;
};

/// Exact maximum of sum_i dim_{F_h}(H_i cap W) over every F_q-subspace W of
/// F_{q^m} of dimension s.  Throws VerificationInfeasible above `cap`
/// subspaces.
DesignVerdict verify_design(const Tower& tower, const SubspaceDesign& design, std::uint64_t cap = 1000000);

/// dim_{F_h}(H cap W) for an F_q-subspace W given by an F_q-basis.
std::size_t intersection_dim(const Tower& tower, const DigitMatrix& H, std::span<const Elem> W);

/// P intersected with H_1 x ... x H_k.
AffineSet intersect_periodic(const Tower& tower, const PeriodicSubspace& P, std::span<const DigitMatrix> H);

bool in_subspace(const BaseField& field, const DigitMatrix& H, std::span<const Digit> x);
/// Uniform message from H_1 x ... x H_k.
std::vector<Elem> sample_design_message(const Tower& tower, std::span<const DigitMatrix> H, Rng& rng);

/// Storage-free pseudorandom subset of F_{q^m}^k: v is a member iff the keyed
/// hash of its digits is 0 modulo ceil(|F_{q^m}|^{eps k}).
struct EvasiveSet {
  std::shared_ptr<const Tower> tower;
  std::size_t k = 1;
  double epsilon = 0;
  std::uint64_t seed = 0;

  std::uint64_t modulus() const;
  double density() const { return 1.0 / static_cast<double>(modulus()); }
  bool contains(std::span<const Elem> v) const;
  bool contains_digits(std::span<const Digit> digits) const;
};

/// Members of S in V, enumerating at most `cap` points of V.
std::vector<DigitVec> intersect_evasive(const EvasiveSet& S, const AffineSet& V, std::size_t cap = 1000000);

/// offset + span_{F_{q^m}}(basis) as an F_h-affine set in F_h^{tk}.
AffineSet affine_span_qm(const Tower& tower, std::span<const Elem> offset,
                         std::span<const std::vector<Elem>> basis);

}  // namespace sumrank

#endif  // SUMRANK_DESIGNS_HPP
