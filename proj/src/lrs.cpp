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

#include "sumrank/lrs.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sumrank {

std::size_t LrsParams::n() const { return std::accumulate(blocks.begin(), blocks.end(), std::size_t{0}); }

LrsParams make_demo_lrs(std::shared_ptr<const Tower> tower, Base sigma, std::vector<std::size_t> blocks,
                        std::size_t k) {
  LrsParams p;
  p.tower = std::move(tower);
  p.sigma = sigma;
  p.blocks = std::move(blocks);
  p.k = k;
  const SkewRing ring(*p.tower, sigma);
  const bool in_subfield = sigma == Base::h;
  p.a = ring.class_representatives(p.blocks.size(), in_subfield);
  const Elem g = in_subfield ? p.tower->subfield_generator() : p.tower->primitive();
  for (std::size_t len : p.blocks) {
    Elem b = p.tower->one();
    for (std::size_t j = 0; j < len; ++j) {
      p.beta.push_back(b);
      b = p.tower->mul(b, g);
    }
  }
  return p;
}

std::vector<std::string> validate(const LrsParams& p) {
  std::vector<std::string> out;
  if (!p.tower) return {"no field tower"};
  const Tower& f = *p.tower;
  const SkewRing ring(f, p.sigma);
  const std::size_t l = p.blocks.size();
  const std::size_t n = p.n();
  if (l == 0) out.push_back("at least one block is required");
  for (std::size_t i = 0; i < l; ++i)
    if (p.blocks[i] == 0) out.push_back("block " + std::to_string(i) + " has length 0");
  if (p.k < 1 || p.k > n) out.push_back("k=" + std::to_string(p.k) + " must satisfy 1 <= k <= n=" + std::to_string(n));
  const std::uint64_t classes = ring.class_count(p.sigma == Base::h);
  if (l > classes)
    out.push_back("l=" + std::to_string(l) + " blocks exceed the " + std::to_string(classes) +
                  " nonzero conjugacy classes available for sigma=" + std::string(to_string(p.sigma)));
  if (p.a.size() != l) {
    out.push_back("expected " + std::to_string(l) + " class representatives a, got " + std::to_string(p.a.size()));
  } else {
    for (std::size_t i = 0; i < l; ++i) {
      if (p.a[i].is_zero()) out.push_back("a_" + std::to_string(i) + " is zero");
      if (p.sigma == Base::h && !f.in_subfield(p.a[i])) out.push_back("a_" + std::to_string(i) + " is not in F_q");
      for (std::size_t j = 0; j < i; ++j)
        if (ring.conjugate(p.a[i], p.a[j]))
          out.push_back("a_" + std::to_string(j) + " and a_" + std::to_string(i) + " are sigma-conjugate");
    }
  }
  if (p.beta.size() != n) {
    out.push_back("expected " + std::to_string(n) + " evaluation points beta, got " + std::to_string(p.beta.size()));
    return out;
  }
  std::size_t off = 0;
  for (std::size_t i = 0; i < l; ++i) {
    std::span<const Elem> blk(p.beta.data() + off, p.blocks[i]);
    if (p.sigma == Base::h)
      for (std::size_t j = 0; j < blk.size(); ++j)
        if (!f.in_subfield(blk[j]))
          out.push_back("beta_" + std::to_string(i) + "," + std::to_string(j) + " is not in F_q");
    if (f.rank_over(blk, p.sigma) != blk.size())
      out.push_back("block " + std::to_string(i) + ": beta is dependent over F_" +
                    std::to_string(f.fixed_order(p.sigma)));
    off += p.blocks[i];
  }
  return out;
}

DigitVec message_digits(const Tower& tower, std::span<const Elem> msg) {
  DigitVec out;
  out.reserve(msg.size() * tower.t());
  for (const auto& c : msg) out.insert(out.end(), c.d.begin(), c.d.begin() + tower.t());
  return out;
}

std::vector<Elem> message_from_digits(const Tower& tower, std::span<const Digit> digits) {
  const unsigned t = tower.t();
  if (digits.size() % t != 0) throw std::invalid_argument("message digit count is not a multiple of t");
  std::vector<Elem> out(digits.size() / t);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = tower.combine_h(digits.subspan(j * t, t));
  return out;
}

namespace {

const LrsParams& checked(const LrsParams& p) {
  const auto report = validate(p);
  if (report.empty()) return p;
  std::ostringstream msg;
  msg << "invalid LRS parameters:";
  for (const auto& r : report) msg << "\n  " << r;
  throw std::invalid_argument(msg.str());
}

}  // namespace

LrsCode::LrsCode(LrsParams params) : params_(checked(params)), ring_(*params_.tower, params_.sigma) {}

SumRankVector LrsCode::encode(std::span<const Elem> msg) const {
  if (msg.size() != params_.k)
    throw std::invalid_argument("message has " + std::to_string(msg.size()) + " coefficients, expected k=" +
                                std::to_string(params_.k));
  return encode(SkewPoly(std::vector<Elem>(msg.begin(), msg.end())));
}

SumRankVector LrsCode::encode(const SkewPoly& f) const {
  if (f.degree() >= static_cast<long>(params_.k)) throw std::invalid_argument("message degree must be < k");
  SumRankVector out = zero_vector(params_.profile());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < params_.blocks.size(); ++i)
    for (std::size_t j = 0; j < params_.blocks[i]; ++j, ++pos)
      out.entries[pos] = ring_.op_eval(f, params_.beta[pos], params_.a[i]);
  return out;
}

std::size_t min_distance_exhaustive(const LrsCode& code, std::uint64_t max_messages) {
  const Tower& f = code.field();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.k(); ++i) {
    if (total > max_messages / f.order())
      throw std::length_error("message space exceeds " + std::to_string(max_messages) +
                              " messages; estimate the distance by sampling instead");
    total *= f.order();
  }
  std::size_t best = code.n() + 1;
  std::vector<Elem> msg(code.k());
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (auto& c : msg) {
      c = f.from_index(x % f.order());
      x /= f.order();
    }
    best = std::min(best, sum_rank_weight(f, code.encode(msg)));
  }
  return best;
}

}  // namespace sumrank
