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

#include "sumrank/metric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sumrank/linalg.hpp"
#include "sumrank/random.hpp"

namespace sumrank {

std::size_t BlockProfile::columns() const { return std::accumulate(lengths.begin(), lengths.end(), std::size_t{0}); }

std::size_t BlockProfile::height(const Tower& tower) const {
  return fold * (base == Base::h ? tower.t() : tower.m());
}

std::size_t BlockProfile::block_cap(const Tower& tower, std::size_t i) const {
  return std::min(lengths.at(i), height(tower));
}

std::size_t BlockProfile::max_weight(const Tower& tower) const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) w += block_cap(tower, i);
  return w;
}

std::size_t BlockProfile::index(std::size_t block, std::size_t col, std::size_t row) const {
  std::size_t before = 0;
  for (std::size_t i = 0; i < block; ++i) before += lengths[i];
  return (before + col) * fold + row;
}

SumRankVector zero_vector(const BlockProfile& profile) { return {profile, std::vector<Elem>(profile.entries())}; }

namespace {

void check_same(const SumRankVector& u, const SumRankVector& v) {
  if (!(u.profile == v.profile)) throw std::invalid_argument("sum-rank vectors have different block profiles");
  if (u.entries.size() != u.profile.entries() || v.entries.size() != v.profile.entries())
    throw std::invalid_argument("sum-rank vector entry count does not match its profile");
}

}  // namespace

SumRankVector add(const Tower& tower, const SumRankVector& u, const SumRankVector& v) {
  check_same(u, v);
  SumRankVector out = u;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = tower.add(u.entries[i], v.entries[i]);
  return out;
}

SumRankVector sub(const Tower& tower, const SumRankVector& u, const SumRankVector& v) {
  check_same(u, v);
  SumRankVector out = u;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = tower.sub(u.entries[i], v.entries[i]);
  return out;
}

std::size_t block_rank(const Tower& tower, const SumRankVector& v, std::size_t block) {
  const auto& p = v.profile;
  const std::size_t cols = p.lengths.at(block);
  if (p.base == Base::h) {
    // Row c of the transposed block is column c expanded over F_h.
    DigitMatrix mat(cols, p.height(tower), 0);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < p.fold; ++r) {
        const Elem& x = v.entries[p.index(block, c, r)];
        for (unsigned u = 0; u < tower.t(); ++u) mat(c, r * tower.t() + u) = x.d[u];
      }
    return rank(tower.base(), std::move(mat));
  }
  Matrix<Elem> mat(cols, p.height(tower));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < p.fold; ++r) {
      const auto coords = tower.expand_q(v.entries[p.index(block, c, r)]);
      for (unsigned u = 0; u < tower.m(); ++u) mat(c, r * tower.m() + u) = coords[u];
    }
  return rank(tower, std::move(mat));
}

std::size_t sum_rank_weight(const Tower& tower, const SumRankVector& v) {
  if (v.entries.size() != v.profile.entries())
    throw std::invalid_argument("sum-rank vector entry count does not match its profile");
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.profile.blocks(); ++i) w += block_rank(tower, v, i);
  return w;
}

std::size_t sum_rank_distance(const Tower& tower, const SumRankVector& u, const SumRankVector& v) {
  return sum_rank_weight(tower, sub(tower, u, v));
}

namespace {

// Uniform draw of a composition e_1 + ... + e_l = e with 0 <= e_i <= caps[i].
std::vector<std::size_t> random_composition(const std::vector<std::size_t>& caps, std::size_t e, Rng& rng) {
  const std::size_t l = caps.size();
  // ways[i][r]: compositions of r using blocks i..l-1.
  std::vector<std::vector<unsigned __int128>> ways(l + 1, std::vector<unsigned __int128>(e + 1, 0));
  ways[l][0] = 1;
  for (std::size_t i = l; i-- > 0;)
    for (std::size_t r = 0; r <= e; ++r)
      for (std::size_t x = 0; x <= std::min(caps[i], r); ++x) ways[i][r] += ways[i + 1][r - x];
  if (ways[0][e] == 0) throw std::invalid_argument("no composition of the requested weight");
  if (ways[0][e] > UINT64_MAX) throw std::invalid_argument("composition count too large");
  std::vector<std::size_t> out(l, 0);
  std::size_t rem = e;
  std::uint64_t pick = rng.below(static_cast<std::uint64_t>(ways[0][e]));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t x = 0; x <= std::min(caps[i], rem); ++x) {
      const auto w = static_cast<std::uint64_t>(ways[i + 1][rem - x]);
      if (pick < w) {
        out[i] = x;
        rem -= x;
        break;
      }
      pick -= w;
    }
  }
  return out;
}

// Random rows x cols matrix over the base subfield with rank min(rows, cols).
Matrix<Elem> random_full_rank(const Tower& tower, Base base, std::size_t rows, std::size_t cols, Rng& rng) {
  const std::size_t want = std::min(rows, cols);
  while (true) {
    Matrix<Elem> mat(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) mat(i, j) = tower.random_in(base, rng);
    if (rank(tower, mat) == want) return mat;
  }
}

}  // namespace

SumRankVector sample_error(const Tower& tower, const BlockProfile& profile, std::size_t e, std::uint64_t seed) {
  const std::size_t cap = profile.max_weight(tower);
  if (e > cap)
    throw std::invalid_argument("error weight " + std::to_string(e) + " exceeds the maximum sum-rank weight " +
                                std::to_string(cap));
  Rng rng(seed);
  std::vector<std::size_t> caps(profile.blocks());
  for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = profile.block_cap(tower, i);
  const auto comp = random_composition(caps, e, rng);
  SumRankVector out = zero_vector(profile);
  const std::size_t height = profile.height(tower);
  const std::size_t per_entry = profile.base == Base::h ? tower.t() : tower.m();
  for (std::size_t b = 0; b < profile.blocks(); ++b) {
    const std::size_t eb = comp[b];
    if (eb == 0) continue;
    const std::size_t cols = profile.lengths[b];
    const auto u = random_full_rank(tower, profile.base, height, eb, rng);
    const auto v = random_full_rank(tower, profile.base, eb, cols, rng);
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t r = 0; r < profile.fold; ++r) {
        std::vector<Elem> coords(per_entry);
        for (std::size_t i = 0; i < per_entry; ++i) {
          Elem acc;
          for (std::size_t k = 0; k < eb; ++k) acc = tower.add(acc, tower.mul(u(r * per_entry + i, k), v(k, c)));
          coords[i] = acc;
        }
        Elem x;
        if (profile.base == Base::h) {
          for (std::size_t i = 0; i < per_entry; ++i) x.d[i] = coords[i].d[0];
        } else {
          x = tower.combine_q(coords);
        }
        out.entries[profile.index(b, c, r)] = x;
      }
    }
  }
  return out;
}

}  // namespace sumrank
