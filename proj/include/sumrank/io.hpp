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

#ifndef SUMRANK_IO_HPP
#define SUMRANK_IO_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sumrank/designs.hpp"
#include "sumrank/flrs.hpp"
#include "sumrank/lrs.hpp"

namespace sumrank {

using Json = nlohmann::ordered_json;

/// Lowercase hex of the base-field coordinates in ascending basis order, one
/// hex character per digit for h <= 16 and two otherwise.
std::string elem_to_hex(const Tower& tower, const Elem& x);
Elem elem_from_hex(const Tower& tower, std::string_view hex);
std::string digits_to_hex(unsigned h, std::span<const Digit> digits);
DigitVec digits_from_hex(unsigned h, std::string_view hex);

Json tower_to_json(const Tower& tower);
std::shared_ptr<const Tower> tower_from_json(const Json& j);

Json to_json(const LrsParams& p);
Json to_json(const FlrsParams& p);
Json to_json(const Tower& tower, const SubspaceDesign& d);
Json to_json(const EvasiveSet& s);
Json to_json(const Tower& tower, const SumRankVector& v);

LrsParams lrs_params_from_json(const Json& j);
FlrsParams flrs_params_from_json(const Json& j);
SubspaceDesign design_from_json(const Json& j);
EvasiveSet evasive_from_json(const Json& j);

/// Value of the "kind" field: lrs, flrs, design or evasive.
std::string kind_of(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace sumrank

#endif  // SUMRANK_IO_HPP
