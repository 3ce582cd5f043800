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

#ifndef SUMRANK_METRIC_HPP
#define SUMRANK_METRIC_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sumrank/gf.hpp"

namespace sumrank {

/// Block lengths n_1..n_l (columns per block), the subfield over which
/// ranks are taken, and the number of entries stacked in each column.
struct BlockProfile {
  std::vector<std::size_t> lengths;
  Base base = Base::h;
  std::size_t fold = 1;

  std::size_t blocks() const { return lengths.size(); }
  std::size_t columns() const;
  std::size_t entries() const { return columns() * fold; }
  /// Rows of a block matrix after expansion over the base subfield.
  std::size_t height(const Tower& tower) const;
  /// Max achievable rank of block i.
  std::size_t block_cap(const Tower& tower, std::size_t i) const;
  std::size_t max_weight(const Tower& tower) const;
  /// Index of entry (row r, column c) of block i in a SumRankVector.
  std::size_t index(std::size_t block, std::size_t col, std::size_t row = 0) const;
  bool operator==(const BlockProfile&) const = default;
};

/// Entries are column-major within each block, blocks in order.
struct SumRankVector {
  BlockProfile profile;
  std::vector<Elem> entries;

  bool operator==(const SumRankVector&) const = default;
};

SumRankVector zero_vector(const BlockProfile& profile);
SumRankVector add(const Tower& tower, const SumRankVector& u, const SumRankVector& v);
SumRankVector sub(const Tower& tower, const SumRankVector& u, const SumRankVector& v);

std::size_t block_rank(const Tower& tower, const SumRankVector& v, std::size_t block);
std::size_t sum_rank_weight(const Tower& tower, const SumRankVector& v);
/// Throws std::invalid_argument on a profile mismatch.
std::size_t sum_rank_distance(const Tower& tower, const SumRankVector& u, const SumRankVector& v);

/// Error of sum-rank weight exactly e, deterministic in the seed.
SumRankVector sample_error(const Tower& tower, const BlockProfile& profile, std::size_t e, std::uint64_t seed);

}  // namespace sumrank

#endif  // SUMRANK_METRIC_HPP
