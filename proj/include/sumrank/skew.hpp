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

#ifndef SUMRANK_SKEW_HPP
#define SUMRANK_SKEW_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sumrank/gf.hpp"

namespace sumrank {

/// f = sum_i c[i] x^i.  No trailing zero coefficients; empty means zero.
struct SkewPoly {
  std::vector<Elem> c;

  SkewPoly() = default;
  explicit SkewPoly(std::vector<Elem> coeffs);

  bool is_zero() const { return c.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c.size() ? c[i] : Elem{}; }
  bool operator==(const SkewPoly&) const = default;
};

/// One conjugacy class of an interpolation problem: representative a,
/// locations b[j] and prescribed values c[j].
struct EvalClass {
  Elem a;
  std::vector<Elem> b;
  std::vector<Elem> c;
};

/// F_{q^m}[x; sigma] where sigma is x -> x^h or x -> x^q on the tower.
class SkewRing {
 public:
  SkewRing(const Tower& field, Base sigma);

  const Tower& field() const { return *field_; }
  Base sigma_base() const { return sigma_; }
  /// Size of the fixed field of sigma.
  std::uint64_t fixed_order() const { return field_->fixed_order(sigma_); }

  Elem sigma(const Elem& c, long long i = 1) const { return field_->frob(c, sigma_, i); }

  SkewPoly add(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly sub(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly mul(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly constant(const Elem& c) const;
  SkewPoly x_power(std::size_t d) const;

  /// N_i(a) = a sigma(a) ... sigma^{i-1}(a).
  Elem gen_power(const Elem& a, std::size_t i) const;
  /// f(b)_a = sum_i f_i sigma^i(b) N_i(a).
  Elem op_eval(const SkewPoly& f, const Elem& b, const Elem& a) const;
  /// (f g)(b)_a == f(g(b)_a)_a.
  bool product_rule_check(const SkewPoly& f, const SkewPoly& g, const Elem& b, const Elem& a) const;

  /// Coefficient-wise x -> x^{q^j}.
  SkewPoly frob_twist(const SkewPoly& f, long long j) const;

  /// Whether b = sigma(c) a c^{-1} for some nonzero c.
  bool conjugate(const Elem& a, const Elem& b) const;
  /// Brute-force conjugacy over all c; only for small fields.
  bool conjugate_brute(const Elem& a, const Elem& b) const;
  /// Number of sigma-conjugacy classes of nonzero elements of the field, or
  /// of those meeting F_q when within_subfield is set.
  std::uint64_t class_count(bool within_subfield) const;
  /// First `count` pairwise non-conjugate elements among the powers of the
  /// primitive element (or of the F_q generator when within_subfield).
  std::vector<Elem> class_representatives(std::size_t count, bool within_subfield = false) const;

  /// Unique f of degree < sum |b_i| with f(b_{i,j})_{a_i} = c_{i,j}.
  SkewPoly lagrange_interpolate(std::span<const EvalClass> classes) const;

  /// Dimension over the fixed field of {b : f(b)_a = 0}.
  std::size_t root_space_dim(const SkewPoly& f, const Elem& a) const;
  /// Sum of root-space dimensions over pairwise non-conjugate a_i is at most
  /// deg f.
  bool root_bound_check(const SkewPoly& f, std::span<const Elem> reps) const;

  struct Stripped {
    std::size_t d = 0;
    SkewPoly g;
  };
  /// f = x^d g with g(0) != 0.
  Stripped left_strip_x(const SkewPoly& f) const;
  /// Largest common d with every f_i = x^d g_i.
  std::size_t common_left_x(std::span<const SkewPoly> fs) const;
  SkewPoly left_divide_x(const SkewPoly& f, std::size_t d) const;

 private:
  const Tower* field_;
  Base sigma_;
};

}  // namespace sumrank

#endif  // SUMRANK_SKEW_HPP
