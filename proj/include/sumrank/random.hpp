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

#ifndef SUMRANK_RANDOM_HPP
#define SUMRANK_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>

namespace sumrank {

/// Seeded mt19937_64; bounded draws use rejection sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 bits.
  double uniform01();

 private:
  std::mt19937_64 engine_;
};

/// SipHash-2-4 (libsodium crypto_shorthash) keyed by `key`.
std::uint64_t keyed_hash(std::uint64_t key, std::span<const std::uint8_t> bytes);

/// Counter-mode fan-out of a master seed: keyed_hash(master, label || counter).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter,
                          std::string_view label = "trial");

std::string hex64(std::uint64_t v);

}  // namespace sumrank

#endif  // SUMRANK_RANDOM_HPP
