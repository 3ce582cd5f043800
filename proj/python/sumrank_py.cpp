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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sumrank/experiment.hpp"
#include "sumrank/flrs.hpp"
#include "sumrank/io.hpp"
#include "sumrank/lrs_decoder.hpp"

namespace py = pybind11;
using namespace sumrank;

namespace {

using Hex = std::string;
using TowerPtr = std::shared_ptr<Tower>;

std::vector<Elem> parse(const Tower& f, const std::vector<Hex>& v) {
  std::vector<Elem> out;
  for (const auto& x : v) out.push_back(elem_from_hex(f, x));
  return out;
}

std::vector<Hex> render(const Tower& f, std::span<const Elem> v) {
  std::vector<Hex> out;
  for (const auto& x : v) out.push_back(elem_to_hex(f, x));
  return out;
}

SumRankVector word(const BlockProfile& prof, const Tower& f, const std::vector<Hex>& v) {
  SumRankVector y{prof, parse(f, v)};
  if (y.entries.size() != prof.entries()) throw std::invalid_argument("word has the wrong number of entries");
  return y;
}

std::vector<std::vector<Hex>> messages(const Tower& f, const std::vector<DigitVec>& list) {
  std::vector<std::vector<Hex>> out;
  for (const auto& d : list) {
    const auto m = message_from_digits(f, d);
    out.push_back(render(f, m));
  }
  return out;
}

py::tuple run_cmd(const std::function<int(std::ostream&, std::ostream&)>& fn) {
  std::ostringstream out, err;
  const int rc = fn(out, err);
  return py::make_tuple(rc, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_sumrank, m) {
  m.doc() = "Sum-rank metric codes: field tower, LRS and folded LRS list decoding, designs and evasive sets.";

  py::class_<Tower, TowerPtr>(m, "Tower")
      .def(py::init([](unsigned h, unsigned n, unsigned mm) { return std::make_shared<Tower>(h, n, mm); }),
           py::arg("h"), py::arg("n"), py::arg("m"))
      .def_property_readonly("h", &Tower::h)
      .def_property_readonly("n", &Tower::n)
      .def_property_readonly("m", &Tower::m)
      .def_property_readonly("t", &Tower::t)
      .def_property_readonly("q", &Tower::q)
      .def_property_readonly("order", &Tower::order)
      .def("one", [](const Tower& f) { return elem_to_hex(f, f.one()); })
      .def("primitive", [](const Tower& f) { return elem_to_hex(f, f.primitive()); })
      .def("subfield_generator", [](const Tower& f) { return elem_to_hex(f, f.subfield_generator()); })
      .def("add", [](const Tower& f, const Hex& a, const Hex& b) {
        return elem_to_hex(f, f.add(elem_from_hex(f, a), elem_from_hex(f, b)));
      })
      .def("mul", [](const Tower& f, const Hex& a, const Hex& b) {
        return elem_to_hex(f, f.mul(elem_from_hex(f, a), elem_from_hex(f, b)));
      })
      .def("inv", [](const Tower& f, const Hex& a) { return elem_to_hex(f, f.inv(elem_from_hex(f, a))); })
      .def("pow", [](const Tower& f, const Hex& a, std::uint64_t e) { return elem_to_hex(f, f.pow(elem_from_hex(f, a), e)); })
      .def("frob", [](const Tower& f, const Hex& a, const std::string& base, long long i) {
        return elem_to_hex(f, f.frob(elem_from_hex(f, a), base_from_string(base), i));
      })
      .def("in_subfield", [](const Tower& f, const Hex& a) { return f.in_subfield(elem_from_hex(f, a)); })
      .def("from_index", [](const Tower& f, std::uint64_t i) { return elem_to_hex(f, f.from_index(i)); });

  py::class_<LrsCode>(m, "LrsCode")
      .def(py::init([](TowerPtr f, const std::string& sigma, std::vector<std::size_t> blocks, std::size_t k) {
             return LrsCode(make_demo_lrs(std::move(f), base_from_string(sigma), std::move(blocks), k));
           }),
           py::arg("tower"), py::arg("sigma"), py::arg("blocks"), py::arg("k"))
      .def_static("from_json", [](const std::string& text) { return LrsCode(lrs_params_from_json(Json::parse(text))); })
      .def("to_json", [](const LrsCode& c) { return to_json(c.params()).dump(); })
      .def_property_readonly("n", &LrsCode::n)
      .def_property_readonly("k", &LrsCode::k)
      .def_property_readonly("tower", [](const LrsCode& c) { return std::const_pointer_cast<Tower>(c.params().tower); })
      .def("encode", [](const LrsCode& c, const std::vector<Hex>& msg) {
        return render(c.field(), c.encode(parse(c.field(), msg)).entries);
      })
      .def("weight", [](const LrsCode& c, const std::vector<Hex>& w) {
        return sum_rank_weight(c.field(), word(c.params().profile(), c.field(), w));
      })
      .def("sample_error", [](const LrsCode& c, std::size_t e, std::uint64_t seed) {
        return render(c.field(), sample_error(c.field(), c.params().profile(), e, seed).entries);
      })
      .def("min_distance", [](const LrsCode& c) { return min_distance_exhaustive(c); })
      .def("radius", [](const LrsCode& c, std::size_t s) { return lrs_radius(c.n(), c.k(), s); })
      .def(
          "decode",
          [](const LrsCode& c, const std::vector<Hex>& y, std::size_t s, std::size_t cap) {
            const auto res = decode_list(c, word(c.params().profile(), c.field(), y), s, {}, cap);
            py::dict d;
            d["dim"] = res.space.dim();
            d["step_dim"] = res.P.step_dim_q();
            d["enumerated"] = res.enumerated;
            d["list"] = messages(c.field(), res.list);
            return d;
          },
          py::arg("y"), py::arg("s"), py::arg("cap") = 20);

  py::class_<FlrsCode>(m, "FlrsCode")
      .def(py::init([](TowerPtr f, std::size_t lambda, std::size_t ell, std::size_t eta, std::size_t k, double eps,
                       std::uint64_t seed) {
             auto p = make_demo_flrs(std::move(f), lambda, ell, eta, k);
             p.epsilon = eps;
             p.evasive_seed = seed;
             return FlrsCode(p);
           }),
           py::arg("tower"), py::arg("lam"), py::arg("ell"), py::arg("eta"), py::arg("k"), py::arg("epsilon") = 0.0,
           py::arg("seed") = 0)
      .def_property_readonly("n", &FlrsCode::n)
      .def_property_readonly("k", &FlrsCode::k)
      .def("encode", [](const FlrsCode& c, const std::vector<Hex>& msg) {
        return render(c.field(), c.encode(parse(c.field(), msg)).entries);
      })
      .def("sample_error", [](const FlrsCode& c, std::size_t e, std::uint64_t seed) {
        return render(c.field(), sample_error(c.field(), c.params().profile(), e, seed).entries);
      })
      .def("radius", [](const FlrsCode& c, std::size_t s) { return flrs_radius(c.n(), c.params().lambda, c.k(), s); })
      .def("decode", [](const FlrsCode& c, const std::vector<Hex>& y, std::size_t s) {
        const auto sol = flrs_solve(c, flrs_interpolate(c, word(c.params().profile(), c.field(), y), s));
        py::dict d;
        d["dim"] = sol.space.dim();
        d["free_indices"] = sol.free_indices;
        std::vector<DigitVec> pts;
        if (sol.space.dim() >= 0 && sol.space.dim() <= 16) pts = sol.space.enumerate(c.field().base(), 1 << 16);
        d["list"] = messages(c.field(), pts);
        return d;
      });

  m.def("add", [](const Tower& f, const std::vector<Hex>& u, const std::vector<Hex>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
    std::vector<Hex> out;
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(elem_to_hex(f, f.add(elem_from_hex(f, u[i]), elem_from_hex(f, v[i]))));
    return out;
  });

  m.def("gen", [](py::dict kw) {
    GenOptions g;
    if (kw.contains("what")) g.what = kw["what"].cast<std::string>();
    if (kw.contains("field")) {
      const auto f = kw["field"].cast<std::vector<unsigned>>();
      if (f.size() != 3) throw std::invalid_argument("field must be (h, n, m)");
      g.h = f[0];
      g.n = f[1];
      g.m = f[2];
    }
    if (kw.contains("sigma")) g.sigma = base_from_string(kw["sigma"].cast<std::string>());
    if (kw.contains("blocks")) g.blocks = kw["blocks"].cast<std::vector<std::size_t>>();
    for (auto [key, dst] : {std::pair<const char*, std::size_t*>{"k", &g.k}, {"lam", &g.lambda}, {"ell", &g.ell},
                            {"eta", &g.eta}, {"M", &g.M}, {"s", &g.s}, {"A", &g.A}})
      if (kw.contains(key)) *dst = kw[key].cast<std::size_t>();
    if (kw.contains("epsilon")) g.epsilon = kw["epsilon"].cast<double>();
    if (kw.contains("seed")) g.seed = kw["seed"].cast<std::uint64_t>();
    if (kw.contains("out")) g.out = kw["out"].cast<std::string>();
    return run_cmd([&](std::ostream& o, std::ostream& e) { return cmd_gen(g, o, e); });
  }, "Returns (exit_code, stdout, stderr).");
  m.def("run", [](const std::string& config_json) {
    const auto cfg = config_from_json(Json::parse(config_json));
    return run_cmd([&](std::ostream& o, std::ostream& e) { return cmd_run(cfg, o, e); });
  }, py::arg("config_json"), "Runs trials from a JSON config; returns (exit_code, stdout, stderr).");
  m.def("verify", [](const std::string& path, std::uint64_t cap) {
    VerifyOptions v;
    v.path = path;
    v.cap = cap;
    return run_cmd([&](std::ostream& o, std::ostream& e) { return cmd_verify(v, o, e); });
  }, py::arg("path"), py::arg("cap") = 1000000);
}
