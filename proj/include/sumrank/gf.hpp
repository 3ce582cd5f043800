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

#ifndef SUMRANK_GF_HPP
#define SUMRANK_GF_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sumrank {

class Rng;

/// Raised on arithmetic that has no value (inverse of zero) and on malformed
/// field parameters.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Selects one of the two Frobenius automorphisms of the tower: x -> x^h or
/// x -> x^q with q = h^n. Also names the subfield fixed by that map.
enum class Base { h, q };

std::string_view to_string(Base b);
Base base_from_string(std::string_view s);

/// Base-field digit.  F_h elements are encoded as integers in [0, h): for a
/// prime h the residue itself, for h = p^e the base-p digits of the
/// coefficient vector over the defining polynomial of F_h.
using Digit = std::uint8_t;

/// The small field F_h, h = p^e <= 256, with full operation tables.
class BaseField {
 public:
  using value_type = Digit;

  /// Prime fields need no modulus; prime powers take the degree-e defining
  /// polynomial over F_p (ascending, monic).
  BaseField(unsigned p, unsigned e, std::vector<unsigned> modulus = {});

  unsigned order() const { return h_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }

  Digit zero() const { return 0; }
  Digit one() const { return 1; }
  bool is_zero(Digit a) const { return a == 0; }
  Digit add(Digit a, Digit b) const { return add_[a * h_ + b]; }
  Digit sub(Digit a, Digit b) const { return add_[a * h_ + neg_[b]]; }
  Digit neg(Digit a) const { return neg_[a]; }
  Digit mul(Digit a, Digit b) const { return mul_[a * h_ + b]; }
  Digit inv(Digit a) const;

 private:
  unsigned p_;
  unsigned e_;
  unsigned h_;
  std::vector<Digit> add_;
  std::vector<Digit> mul_;
  std::vector<Digit> neg_;
  std::vector<Digit> inv_;
};

/// Versioned table of defining polynomials keyed by "h,t" (towers) and
/// "p,e" (prime-power base fields).
class Registry {
 public:
  static const Registry& builtin();
  static Registry parse(std::string_view json_text);

  int version() const { return version_; }
  const std::vector<unsigned>& tower(unsigned h, unsigned t) const;
  const std::vector<unsigned>& subfield(unsigned p, unsigned e) const;
  bool has_tower(unsigned h, unsigned t) const;
  const std::map<std::string, std::vector<unsigned>>& towers() const { return towers_; }

 private:
  int version_ = 0;
  std::map<std::string, std::vector<unsigned>> towers_;
  std::map<std::string, std::vector<unsigned>> subfields_;
};

BaseField make_base_field(unsigned h, const Registry& registry = Registry::builtin());

inline constexpr std::size_t kMaxDegree = 48;
inline constexpr unsigned kMaxOrderBits = 48;

/// Element of F_{h^t} in polynomial-basis coordinates over F_h.  Digits at
/// positions >= t are always zero.  Elements do not know their field; every
/// operation goes through the owning Tower.
struct Elem {
  std::array<Digit, kMaxDegree> d{};

  bool is_zero() const;
  auto operator<=>(const Elem&) const = default;
};

/// Prime factorisation by trial division; fine for the < 2^48 orders used.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// The chain F_h < F_q = F_{h^n} < F_{q^m} = F_{h^t}, t = n*m, realised as a
/// single extension of F_h of degree t.  F_q is the fixed field of x -> x^q.
///
/// Immutable after construction; safe to share across threads.
class Tower {
 public:
  using value_type = Elem;

  /// Looks up the degree-t modulus in the registry and verifies it is
  /// irreducible.
  Tower(unsigned h, unsigned n, unsigned m, const Registry& registry = Registry::builtin());
  Tower(BaseField base, unsigned n, unsigned m, std::vector<Digit> modulus);

  const BaseField& base() const { return base_; }
  unsigned h() const { return base_.order(); }
  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  unsigned t() const { return t_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t q() const { return q_; }
  /// |fixed field of the chosen Frobenius|: h or q.
  std::uint64_t fixed_order(Base b) const { return b == Base::h ? h() : q_; }
  /// Degree of the fixed field over F_h: 1 or n.
  unsigned fixed_degree(Base b) const { return b == Base::h ? 1 : n_; }
  const std::vector<Digit>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{}; }
  Elem one() const;
  /// The polynomial-basis generator z.
  Elem generator() const;
  Elem constant(Digit c) const;
  bool is_zero(const Elem& a) const { return a.is_zero(); }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(Digit c, const Elem& a) const;
  /// Throws FieldError on zero.
  Elem inv(const Elem& a) const;
  std::optional<Elem> try_inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, std::uint64_t e) const;

  /// x^{h^i} (base h) or x^{q^i} (base q); negative i applies the inverse.
  Elem frob(const Elem& x, Base b, long long i) const;
  bool in_subfield(const Elem& x) const;

  /// Primitive element found by scanning elements in index order.
  const Elem& primitive() const { return primitive_; }
  /// Generator of F_q^*, namely primitive()^{(h^t-1)/(q-1)}.
  const Elem& subfield_generator() const { return theta_; }
  std::uint64_t multiplicative_order(const Elem& a) const;

  std::uint64_t to_index(const Elem& a) const;
  Elem from_index(std::uint64_t index) const;

  /// Coordinates over F_h in the polynomial basis.
  std::vector<Digit> expand_h(const Elem& x) const;
  Elem combine_h(std::span<const Digit> coords) const;
  /// Coordinates over F_q (as subfield elements) in the basis
  /// 1, g, ..., g^{m-1} with g = primitive().
  std::vector<Elem> expand_q(const Elem& x) const;
  Elem combine_q(std::span<const Elem> coords) const;
  /// Dispatches on the base subfield.
  std::vector<Elem> expand(const Elem& x, Base b) const;

  /// Rank over the fixed field of `b` of a family of elements.
  std::size_t rank_over(std::span<const Elem> v, Base b) const;

  Elem random(Rng& rng) const;
  /// Uniform element of F_h (base h) or F_q (base q).
  Elem random_in(Base b, Rng& rng) const;
  /// Element of the subfield F_q from its base-h digits in the basis
  /// 1, theta, ..., theta^{n-1}.
  Elem subfield_element(std::uint64_t index) const;

 private:
  void init();
  Elem apply_frob(const Elem& x, unsigned power) const;

  BaseField base_;
  unsigned n_;
  unsigned m_;
  unsigned t_;
  std::uint64_t order_;
  std::uint64_t q_;
  std::vector<Digit> modulus_;
  // frob_[j][u] = z^u raised to h^j.
  std::vector<std::vector<Elem>> frob_;
  Elem primitive_;
  Elem theta_;
  std::vector<std::uint64_t> order_factors_;
  // Inverse of the change of basis {theta^u g^j} -> polynomial basis.
  std::vector<std::vector<Digit>> q_coords_;
};

/// Ben-Or test: gcd(z^{h^i} - z, f) = 1 for i <= t/2.
bool is_irreducible(const BaseField& base, std::span<const Digit> monic);

}  // namespace sumrank

#endif  // SUMRANK_GF_HPP
