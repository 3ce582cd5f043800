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

#include "sumrank/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sumrank/random.hpp"

namespace sumrank {

namespace {

unsigned hex_width(unsigned h) { return h <= 16 ? 1 : 2; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

void require(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
}

std::vector<Elem> elems_from(const Tower& f, const Json& arr) {
  std::vector<Elem> out;
  for (const auto& x : arr) out.push_back(elem_from_hex(f, x.get<std::string>()));
  return out;
}

Json elems_to(const Tower& f, std::span<const Elem> v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(elem_to_hex(f, x));
  return arr;
}

}  // namespace

std::string digits_to_hex(unsigned h, std::span<const Digit> digits) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (Digit d : digits) {
    if (d >= h) throw std::invalid_argument("digit out of range for F_" + std::to_string(h));
    if (hex_width(h) == 2) out.push_back(kHex[d >> 4]);
    out.push_back(kHex[d & 15]);
  }
  return out;
}

DigitVec digits_from_hex(unsigned h, std::string_view hex) {
  const unsigned w = hex_width(h);
  if (hex.size() % w != 0) throw std::invalid_argument("hex string has a partial digit");
  DigitVec out;
  for (std::size_t i = 0; i < hex.size(); i += w) {
    int v = 0;
    for (unsigned c = 0; c < w; ++c) {
      const int x = hex_value(hex[i + c]);
      if (x < 0) throw std::invalid_argument("invalid hex character in \"" + std::string(hex) + "\"");
      v = v * 16 + x;
    }
    if (static_cast<unsigned>(v) >= h) throw std::invalid_argument("digit out of range for F_" + std::to_string(h));
    out.push_back(static_cast<Digit>(v));
  }
  return out;
}

std::string elem_to_hex(const Tower& tower, const Elem& x) {
  return digits_to_hex(tower.h(), std::span<const Digit>(x.d.data(), tower.t()));
}

Elem elem_from_hex(const Tower& tower, std::string_view hex) {
  const auto d = digits_from_hex(tower.h(), hex);
  if (d.size() != tower.t())
    throw std::invalid_argument("element \"" + std::string(hex) + "\" does not have " + std::to_string(tower.t()) +
                                " coordinates");
  return tower.combine_h(d);
}

Json tower_to_json(const Tower& f) {
  return Json{{"h", f.h()},
              {"n", f.n()},
              {"m", f.m()},
              {"modulus", digits_to_hex(f.h(), f.modulus())},
              {"registry_version", Registry::builtin().version()}};
}

std::shared_ptr<const Tower> tower_from_json(const Json& j) {
  for (const char* key : {"h", "n", "m"}) require(j, key);
  const unsigned h = j["h"], n = j["n"], m = j["m"];
  if (!j.contains("modulus")) return std::make_shared<const Tower>(h, n, m);
  const auto mod = digits_from_hex(h, j["modulus"].get<std::string>());
  return std::make_shared<const Tower>(make_base_field(h), n, m, mod);
}

Json to_json(const LrsParams& p) {
  const Tower& f = *p.tower;
  return Json{{"kind", "lrs"},           {"field", tower_to_json(f)}, {"sigma", std::string(to_string(p.sigma))},
              {"blocks", p.blocks},      {"k", p.k},                  {"a", elems_to(f, p.a)},
              {"beta", elems_to(f, p.beta)}};
}

LrsParams lrs_params_from_json(const Json& j) {
  for (const char* key : {"field", "sigma", "blocks", "k", "a", "beta"}) require(j, key);
  LrsParams p;
  p.tower = tower_from_json(j["field"]);
  p.sigma = base_from_string(j["sigma"].get<std::string>());
  p.blocks = j["blocks"].get<std::vector<std::size_t>>();
  p.k = j["k"];
  p.a = elems_from(*p.tower, j["a"]);
  p.beta = elems_from(*p.tower, j["beta"]);
  return p;
}

Json to_json(const FlrsParams& p) {
  const Tower& f = *p.tower;
  return Json{{"kind", "flrs"},
              {"field", tower_to_json(f)},
              {"lambda", p.lambda},
              {"ell", p.ell},
              {"eta", p.eta},
              {"N", p.N()},
              {"k", p.k},
              {"gamma", elem_to_hex(f, p.gamma)},
              {"a", elems_to(f, p.a)},
              {"epsilon", p.epsilon},
              {"evasive_seed", hex64(p.evasive_seed)}};
}

FlrsParams flrs_params_from_json(const Json& j) {
  for (const char* key : {"field", "lambda", "ell", "eta", "k", "gamma", "a"}) require(j, key);
  FlrsParams p;
  p.tower = tower_from_json(j["field"]);
  p.lambda = j["lambda"];
  p.ell = j["ell"];
  p.eta = j["eta"];
  p.k = j["k"];
  p.gamma = elem_from_hex(*p.tower, j["gamma"].get<std::string>());
  p.a = elems_from(*p.tower, j["a"]);
  p.epsilon = j.value("epsilon", 0.0);
  p.evasive_seed = j.contains("evasive_seed") ? std::stoull(j["evasive_seed"].get<std::string>(), nullptr, 16) : 0;
  if (j.contains("N") && j["N"].get<std::size_t>() != p.N())
    throw std::invalid_argument("N=" + std::to_string(j["N"].get<std::size_t>()) + " is not lambda*ell*eta=" +
                                std::to_string(p.N()));
  return p;
}

Json to_json(const Tower& f, const SubspaceDesign& d) {
  Json subs = Json::array();
  for (const auto& H : d.subspaces) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < H.rows(); ++r) rows.push_back(digits_to_hex(f.h(), H.row(r)));
    subs.push_back(rows);
  }
  return Json{{"kind", "design"}, {"field", tower_to_json(f)}, {"s", d.s},           {"A", d.A},
              {"epsilon", d.epsilon}, {"seed", hex64(d.seed)}, {"subspaces", subs}};
}

SubspaceDesign design_from_json(const Json& j) {
  for (const char* key : {"field", "s", "A", "subspaces"}) require(j, key);
  const auto f = tower_from_json(j["field"]);
  SubspaceDesign d;
  d.h = f->h();
  d.n = f->n();
  d.m = f->m();
  d.s = j["s"];
  d.A = j["A"];
  d.epsilon = j.value("epsilon", 0.0);
  d.seed = j.contains("seed") ? std::stoull(j["seed"].get<std::string>(), nullptr, 16) : 0;
  for (const auto& sub : j["subspaces"]) {
    DigitMatrix H;
    for (const auto& row : sub) {
      const auto digits = digits_from_hex(d.h, row.get<std::string>());
      if (digits.size() != f->t()) throw std::invalid_argument("design row does not have t coordinates");
      H.append_row(digits);
    }
    d.subspaces.push_back(std::move(H));
  }
  return d;
}

Json to_json(const EvasiveSet& s) {
  return Json{{"kind", "evasive"},   {"field", tower_to_json(*s.tower)}, {"k", s.k},
              {"epsilon", s.epsilon}, {"seed", hex64(s.seed)},          {"modulus", s.modulus()}};
}

EvasiveSet evasive_from_json(const Json& j) {
  for (const char* key : {"field", "k", "epsilon", "seed"}) require(j, key);
  EvasiveSet s;
  s.tower = tower_from_json(j["field"]);
  s.k = j["k"];
  s.epsilon = j["epsilon"];
  s.seed = std::stoull(j["seed"].get<std::string>(), nullptr, 16);
  return s;
}

Json to_json(const Tower& f, const SumRankVector& v) {
  return Json{{"blocks", v.profile.lengths},
              {"base", std::string(to_string(v.profile.base))},
              {"fold", v.profile.fold},
              {"entries", elems_to(f, v.entries)}};
}

std::string kind_of(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("file has no \"kind\" field");
  return j["kind"].get<std::string>();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace sumrank
