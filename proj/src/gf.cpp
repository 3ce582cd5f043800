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

#include "sumrank/gf.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"
#include "sumrank/linalg.hpp"
#include "sumrank/random.hpp"

namespace sumrank {

namespace detail {
extern const char* const kRegistryJson;
}

std::string_view to_string(Base b) { return b == Base::h ? "h" : "q"; }

Base base_from_string(std::string_view s) {
  if (s == "h") return Base::h;
  if (s == "q") return Base::q;
  throw std::invalid_argument("unknown base subfield '" + std::string(s) + "' (expected h or q)");
}

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> split_prime_power(unsigned h) {
  for (unsigned p = 2; p <= h; ++p) {
    if (h % p != 0) continue;
    unsigned e = 0;
    unsigned r = h;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1 || !is_prime(p)) break;
    return {p, e};
  }
  throw FieldError("field order " + std::to_string(h) + " is not a prime power");
}

// Polynomials over F_h as ascending digit vectors, trimmed.
using Poly = std::vector<Digit>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(const BaseField& f, Poly a, const Poly& b) {
  trim(a);
  const Digit lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Digit c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

Poly poly_mul(const BaseField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

Poly poly_sub(const BaseField& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

// Quotient and remainder.
std::pair<Poly, Poly> poly_divmod(const BaseField& f, Poly a, const Poly& b) {
  trim(a);
  Poly quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, 0);
  const Digit lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Digit c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

Poly poly_gcd(const BaseField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(const BaseField& f, Poly base, std::uint64_t e, const Poly& mod) {
  Poly result{1};
  base = poly_mod(f, base, mod);
  while (e) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, base), mod);
    base = poly_mod(f, poly_mul(f, base, base), mod);
    e >>= 1;
  }
  return result;
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (out > (std::uint64_t{1} << kMaxOrderBits) / base)
      throw FieldError("field order exceeds 2^" + std::to_string(kMaxOrderBits));
    out *= base;
  }
  return out;
}

std::string reg_key(unsigned a, unsigned b) { return std::to_string(a) + "," + std::to_string(b); }

}  // namespace

// ---------------------------------------------------------------------------
// BaseField

BaseField::BaseField(unsigned p, unsigned e, std::vector<unsigned> modulus) : p_(p), e_(e) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw FieldError("base field degree must be positive");
  unsigned h = 1;
  for (unsigned i = 0; i < e; ++i) {
    h *= p;
    if (h > 256) throw FieldError("base field order exceeds 256");
  }
  h_ = h;
  if (e > 1) {
    if (modulus.size() != e + 1 || modulus.back() != 1)
      throw FieldError("base field modulus must be monic of degree " + std::to_string(e));
    for (unsigned c : modulus)
      if (c >= p) throw FieldError("base field modulus coefficient out of range");
  }
  auto digits = [&](unsigned x) {
    std::vector<unsigned> out(e, 0);
    for (unsigned i = 0; i < e; ++i, x /= p) out[i] = x % p;
    return out;
  };
  auto encode = [&](const std::vector<unsigned>& d) {
    unsigned v = 0;
    for (unsigned i = e; i-- > 0;) v = v * p + d[i];
    return v;
  };
  add_.resize(h * h);
  mul_.resize(h * h);
  neg_.resize(h);
  inv_.assign(h, 0);
  for (unsigned x = 0; x < h; ++x) {
    const auto dx = digits(x);
    std::vector<unsigned> nx(e);
    for (unsigned i = 0; i < e; ++i) nx[i] = (p - dx[i]) % p;
    neg_[x] = static_cast<Digit>(encode(nx));
    for (unsigned y = 0; y < h; ++y) {
      const auto dy = digits(y);
      std::vector<unsigned> s(e);
      for (unsigned i = 0; i < e; ++i) s[i] = (dx[i] + dy[i]) % p;
      add_[x * h + y] = static_cast<Digit>(encode(s));
      if (e == 1) {
        mul_[x * h + y] = static_cast<Digit>((x * y) % p);
        continue;
      }
      std::vector<unsigned> prod(2 * e - 1, 0);
      for (unsigned i = 0; i < e; ++i)
        for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
      for (unsigned d = 2 * e - 1; d-- > e;) {
        const unsigned c = prod[d];
        if (c == 0) continue;
        for (unsigned u = 0; u <= e; ++u) prod[d - e + u] = (prod[d - e + u] + (p - c) * modulus[u]) % p;
      }
      prod.resize(e);
      mul_[x * h + y] = static_cast<Digit>(encode(prod));
    }
  }
  for (unsigned x = 1; x < h; ++x) {
    for (unsigned y = 1; y < h; ++y) {
      if (mul_[x * h + y] == 1) {
        inv_[x] = static_cast<Digit>(y);
        break;
      }
    }
    if (inv_[x] == 0) throw FieldError("base field modulus is reducible");
  }
}

Digit BaseField::inv(Digit a) const {
  if (a == 0) throw FieldError("division by zero in F_" + std::to_string(h_));
  return inv_[a];
}

// ---------------------------------------------------------------------------
// Registry

Registry Registry::parse(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  Registry reg;
  reg.version_ = doc.at("version").get<int>();
  for (const auto& [key, value] : doc.at("towers").items()) reg.towers_[key] = value.get<std::vector<unsigned>>();
  if (doc.contains("subfields"))
    for (const auto& [key, value] : doc.at("subfields").items())
      reg.subfields_[key] = value.get<std::vector<unsigned>>();
  return reg;
}

const Registry& Registry::builtin() {
  static const Registry reg = parse(detail::kRegistryJson);
  return reg;
}

bool Registry::has_tower(unsigned h, unsigned t) const { return towers_.count(reg_key(h, t)) != 0; }

const std::vector<unsigned>& Registry::tower(unsigned h, unsigned t) const {
  const auto it = towers_.find(reg_key(h, t));
  if (it == towers_.end()) throw FieldError("no registry entry for tower h=" + std::to_string(h) + ", t=" + std::to_string(t));
  return it->second;
}

const std::vector<unsigned>& Registry::subfield(unsigned p, unsigned e) const {
  const auto it = subfields_.find(reg_key(p, e));
  if (it == subfields_.end()) throw FieldError("no registry entry for base field " + std::to_string(p) + "^" + std::to_string(e));
  return it->second;
}

BaseField make_base_field(unsigned h, const Registry& registry) {
  const auto [p, e] = split_prime_power(h);
  if (e == 1) return BaseField(p, 1);
  return BaseField(p, e, registry.subfield(p, e));
}

// ---------------------------------------------------------------------------
// Elem and helpers

bool Elem::is_zero() const {
  return std::all_of(d.begin(), d.end(), [](Digit x) { return x == 0; });
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const BaseField& base, std::span<const Digit> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t t = f.size() - 1;
  if (t == 1) return true;
  Poly power{0, 1};
  const Poly z{0, 1};
  for (std::size_t i = 1; i <= t / 2; ++i) {
    power = poly_powmod(base, power, base.order(), f);
    const Poly g = poly_gcd(base, f, poly_sub(base, power, z));
    if (g.size() > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Tower

namespace {

std::vector<Digit> registry_modulus(const Registry& registry, unsigned h, unsigned t) {
  const auto& coeffs = registry.tower(h, t);
  std::vector<Digit> out;
  out.reserve(coeffs.size());
  for (unsigned c : coeffs) {
    if (c >= h) throw FieldError("registry coefficient out of range for h=" + std::to_string(h));
    out.push_back(static_cast<Digit>(c));
  }
  return out;
}

}  // namespace

Tower::Tower(unsigned h, unsigned n, unsigned m, const Registry& registry)
    : Tower(make_base_field(h, registry), n, m, registry_modulus(registry, h, n * m)) {}

Tower::Tower(BaseField base, unsigned n, unsigned m, std::vector<Digit> modulus)
    : base_(std::move(base)), n_(n), m_(m), t_(n * m), modulus_(std::move(modulus)) {
  if (n == 0 || m == 0) throw FieldError("tower degrees n and m must be positive");
  if (t_ > kMaxDegree) throw FieldError("tower degree t=" + std::to_string(t_) + " exceeds " + std::to_string(kMaxDegree));
  order_ = checked_power(base_.order(), t_);
  q_ = checked_power(base_.order(), n_);
  if (modulus_.size() != t_ + 1 || modulus_.back() != 1)
    throw FieldError("tower modulus must be monic of degree " + std::to_string(t_));
  if (!is_irreducible(base_, modulus_)) throw FieldError("tower modulus is reducible over F_" + std::to_string(h()));
  init();
}

void Tower::init() {
  // Frobenius images z^u -> (z^u)^{h^j} for every j < t.
  frob_.assign(t_, std::vector<Elem>(t_));
  Elem zu = one();
  for (unsigned u = 0; u < t_; ++u) {
    frob_[0][u] = zu;
    zu = mul(zu, generator());
  }
  if (t_ > 1) {
    for (unsigned u = 0; u < t_; ++u) frob_[1][u] = pow(frob_[0][u], h());
    for (unsigned j = 2; j < t_; ++j)
      for (unsigned u = 0; u < t_; ++u) frob_[j][u] = apply_frob(frob_[j - 1][u], 1);
  }

  order_factors_ = prime_factors(order_ - 1);
  primitive_ = one();
  for (std::uint64_t idx = 1; idx < order_; ++idx) {
    const Elem cand = from_index(idx);
    if (multiplicative_order(cand) == order_ - 1) {
      primitive_ = cand;
      break;
    }
  }
  theta_ = pow(primitive_, (order_ - 1) / (q_ - 1));

  // Change of basis to {theta^u g^j}, column index j*n + u.
  DigitMatrix basis(t_, t_, 0);
  Elem gj = one();
  for (unsigned j = 0; j < m_; ++j) {
    Elem tu = gj;
    for (unsigned u = 0; u < n_; ++u) {
      for (unsigned r = 0; r < t_; ++r) basis(r, j * n_ + u) = tu.d[r];
      tu = mul(tu, theta_);
    }
    gj = mul(gj, primitive_);
  }
  const auto inv = inverse(base_, basis);
  if (!inv) throw FieldError("subfield basis is singular");
  q_coords_.assign(t_, std::vector<Digit>(t_));
  for (unsigned r = 0; r < t_; ++r)
    for (unsigned c = 0; c < t_; ++c) q_coords_[r][c] = (*inv)(r, c);
}

Elem Tower::one() const {
  Elem e;
  e.d[0] = 1;
  return e;
}

Elem Tower::generator() const {
  if (t_ == 1) {
    // F_h itself: z is the root of the linear modulus z + c0.
    return constant(base_.neg(modulus_[0]));
  }
  Elem e;
  e.d[1] = 1;
  return e;
}

Elem Tower::constant(Digit c) const {
  Elem e;
  e.d[0] = c;
  return e;
}

Elem Tower::add(const Elem& a, const Elem& b) const {
  Elem out;
  for (unsigned i = 0; i < t_; ++i) out.d[i] = base_.add(a.d[i], b.d[i]);
  return out;
}

Elem Tower::sub(const Elem& a, const Elem& b) const {
  Elem out;
  for (unsigned i = 0; i < t_; ++i) out.d[i] = base_.sub(a.d[i], b.d[i]);
  return out;
}

Elem Tower::neg(const Elem& a) const {
  Elem out;
  for (unsigned i = 0; i < t_; ++i) out.d[i] = base_.neg(a.d[i]);
  return out;
}

Elem Tower::scale(Digit c, const Elem& a) const {
  Elem out;
  if (c == 0) return out;
  for (unsigned i = 0; i < t_; ++i) out.d[i] = base_.mul(c, a.d[i]);
  return out;
}

Elem Tower::mul(const Elem& a, const Elem& b) const {
  std::array<Digit, 2 * kMaxDegree> acc{};
  if (base_.degree() == 1) {
    // Prime base: accumulate in integers, reduce once.
    const unsigned p = base_.characteristic();
    std::array<std::uint32_t, 2 * kMaxDegree> wide{};
    for (unsigned i = 0; i < t_; ++i) {
      if (a.d[i] == 0) continue;
      for (unsigned j = 0; j < t_; ++j) wide[i + j] += std::uint32_t{a.d[i]} * b.d[j];
    }
    for (unsigned d = 2 * t_ - 1; d-- > t_;) {
      const std::uint32_t c = wide[d] % p;
      if (c == 0) continue;
      const std::uint32_t negc = p - c;
      for (unsigned u = 0; u < t_; ++u) wide[d - t_ + u] += negc * modulus_[u];
      wide[d] = 0;
    }
    Elem out;
    for (unsigned i = 0; i < t_; ++i) out.d[i] = static_cast<Digit>(wide[i] % p);
    return out;
  }
  for (unsigned i = 0; i < t_; ++i) {
    if (a.d[i] == 0) continue;
    for (unsigned j = 0; j < t_; ++j) acc[i + j] = base_.add(acc[i + j], base_.mul(a.d[i], b.d[j]));
  }
  for (unsigned d = 2 * t_ - 1; d-- > t_;) {
    const Digit c = acc[d];
    if (c == 0) continue;
    for (unsigned u = 0; u < t_; ++u) acc[d - t_ + u] = base_.sub(acc[d - t_ + u], base_.mul(c, modulus_[u]));
    acc[d] = 0;
  }
  Elem out;
  std::copy_n(acc.begin(), t_, out.d.begin());
  return out;
}

std::optional<Elem> Tower::try_inv(const Elem& a) const {
  if (a.is_zero()) return std::nullopt;
  // Extended Euclid on (modulus, a): track s with s*a == r (mod modulus).
  Poly r0(modulus_.begin(), modulus_.end());
  Poly r1(a.d.begin(), a.d.begin() + t_);
  trim(r1);
  Poly s0;
  Poly s1{1};
  while (r1.size() > 1) {
    auto [quot, rem] = poly_divmod(base_, r0, r1);
    Poly s2 = poly_sub(base_, s0, poly_mul(base_, quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because the modulus is irreducible.
  const Digit c = base_.inv(r1.at(0));
  Poly s = poly_mod(base_, s1, Poly(modulus_.begin(), modulus_.end()));
  Elem out;
  for (std::size_t i = 0; i < s.size(); ++i) out.d[i] = base_.mul(c, s[i]);
  return out;
}

Elem Tower::inv(const Elem& a) const {
  auto r = try_inv(a);
  if (!r) throw FieldError("division by zero in F_{" + std::to_string(h()) + "^" + std::to_string(t_) + "}");
  return *r;
}

Elem Tower::pow(const Elem& a, std::uint64_t e) const {
  Elem result = one();
  Elem b = a;
  while (e) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return result;
}

Elem Tower::apply_frob(const Elem& x, unsigned power) const {
  if (power == 0) return x;
  Elem out;
  const auto& images = frob_[power];
  for (unsigned u = 0; u < t_; ++u) {
    const Digit c = x.d[u];
    if (c == 0) continue;
    const Elem& img = images[u];
    for (unsigned i = 0; i < t_; ++i) out.d[i] = base_.add(out.d[i], base_.mul(c, img.d[i]));
  }
  return out;
}

Elem Tower::frob(const Elem& x, Base b, long long i) const {
  const long long step = (b == Base::h ? 1 : static_cast<long long>(n_));
  const long long t = t_;
  long long j = (i % t) * step % t;
  if (j < 0) j += t;
  return apply_frob(x, static_cast<unsigned>(j));
}

bool Tower::in_subfield(const Elem& x) const { return frob(x, Base::h, n_) == x; }

std::uint64_t Tower::multiplicative_order(const Elem& a) const {
  if (a.is_zero()) throw FieldError("zero has no multiplicative order");
  std::uint64_t ord = order_ - 1;
  for (auto p : order_factors_) {
    while (ord % p == 0 && pow(a, ord / p) == one()) ord /= p;
  }
  return ord;
}

std::uint64_t Tower::to_index(const Elem& a) const {
  std::uint64_t v = 0;
  for (unsigned i = t_; i-- > 0;) v = v * h() + a.d[i];
  return v;
}

Elem Tower::from_index(std::uint64_t index) const {
  if (index >= order_) throw FieldError("element index out of range");
  Elem e;
  for (unsigned i = 0; i < t_; ++i, index /= h()) e.d[i] = static_cast<Digit>(index % h());
  return e;
}

std::vector<Digit> Tower::expand_h(const Elem& x) const { return {x.d.begin(), x.d.begin() + t_}; }

Elem Tower::combine_h(std::span<const Digit> coords) const {
  if (coords.size() != t_) throw std::invalid_argument("combine_h: expected " + std::to_string(t_) + " coordinates");
  Elem e;
  for (unsigned i = 0; i < t_; ++i) {
    if (coords[i] >= h()) throw std::invalid_argument("combine_h: digit out of range");
    e.d[i] = coords[i];
  }
  return e;
}

std::vector<Elem> Tower::expand_q(const Elem& x) const {
  std::vector<Digit> c(t_, 0);
  for (unsigned r = 0; r < t_; ++r) {
    Digit acc = 0;
    for (unsigned k = 0; k < t_; ++k) acc = base_.add(acc, base_.mul(q_coords_[r][k], x.d[k]));
    c[r] = acc;
  }
  std::vector<Elem> out(m_);
  for (unsigned j = 0; j < m_; ++j) {
    Elem coord;
    Elem tu = one();
    for (unsigned u = 0; u < n_; ++u) {
      coord = add(coord, scale(c[j * n_ + u], tu));
      tu = mul(tu, theta_);
    }
    out[j] = coord;
  }
  return out;
}

Elem Tower::combine_q(std::span<const Elem> coords) const {
  if (coords.size() != m_) throw std::invalid_argument("combine_q: expected " + std::to_string(m_) + " coordinates");
  Elem out;
  Elem gj = one();
  for (unsigned j = 0; j < m_; ++j) {
    out = add(out, mul(coords[j], gj));
    gj = mul(gj, primitive_);
  }
  return out;
}

std::vector<Elem> Tower::expand(const Elem& x, Base b) const {
  if (b == Base::q) return expand_q(x);
  std::vector<Elem> out(t_);
  for (unsigned i = 0; i < t_; ++i) out[i] = constant(x.d[i]);
  return out;
}

std::size_t Tower::rank_over(std::span<const Elem> v, Base b) const {
  if (v.empty()) return 0;
  if (b == Base::h) {
    DigitMatrix mat(v.size(), t_, 0);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (unsigned j = 0; j < t_; ++j) mat(i, j) = v[i].d[j];
    return rank(base_, std::move(mat));
  }
  Matrix<Elem> mat(v.size(), m_);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto c = expand_q(v[i]);
    for (unsigned j = 0; j < m_; ++j) mat(i, j) = c[j];
  }
  return rank(*this, std::move(mat));
}

Elem Tower::random(Rng& rng) const {
  Elem e;
  for (unsigned i = 0; i < t_; ++i) e.d[i] = static_cast<Digit>(rng.below(h()));
  return e;
}

Elem Tower::subfield_element(std::uint64_t index) const {
  if (index >= q_) throw FieldError("subfield index out of range");
  Elem out;
  Elem tu = one();
  for (unsigned u = 0; u < n_; ++u, index /= h()) {
    out = add(out, scale(static_cast<Digit>(index % h()), tu));
    tu = mul(tu, theta_);
  }
  return out;
}

Elem Tower::random_in(Base b, Rng& rng) const {
  if (b == Base::h) return constant(static_cast<Digit>(rng.below(h())));
  return subfield_element(rng.below(q_));
}

}  // namespace sumrank
