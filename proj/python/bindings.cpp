// Copyright 2026 The wigner-codes Authors
//
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "wigner_codes/codes.hpp"
#include "wigner_codes/faceops.hpp"
#include "wigner_codes/mub.hpp"
#include "wigner_codes/verify.hpp"
#include "wigner_codes/wigner.hpp"

namespace py = pybind11;
using namespace wigner_codes;

namespace {

FaceLabel make_label(int q, const std::vector<Elem>& values, const std::optional<std::vector<int>>& bases) {
  if (!bases) {
    if (static_cast<int>(values.size()) != q + 1)
      throw std::invalid_argument("facet label needs q+1 values unless bases are given");
    return FaceLabel::facet(values);
  }
  FaceLabel label;
  label.values = values;
  for (int s : *bases) label.bases.push_back({s});
  return label;
}

std::vector<std::vector<Elem>> words_of(const LinearCode& code) {
  std::vector<std::vector<Elem>> out;
  for (const auto& w : code.codewords()) out.push_back(w.symbols());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Face operators, MUBs and discrete Wigner functions over GF(q)";

  py::class_<GaloisField, std::shared_ptr<GaloisField>>(m, "Field")
      .def_property_readonly("p", &GaloisField::p)
      .def_property_readonly("n", &GaloisField::n)
      .def_property_readonly("q", &GaloisField::q)
      .def_property_readonly("modulus", [](const GaloisField& f) { return f.spec().modulus; })
      .def_property_readonly("alpha", &GaloisField::alpha)
      .def("add", &GaloisField::add)
      .def("mul", &GaloisField::mul)
      .def("inv", &GaloisField::inv)
      .def("trace", &GaloisField::trace)
      .def("alpha_pow", &GaloisField::alpha_pow)
      .def("power_name", &GaloisField::power_name)
      .def("__repr__", [](const GaloisField& f) { return "<Field GF(" + std::to_string(f.q()) + ")>"; });

  m.def(
      "field",
      [](int q, std::optional<std::vector<int>> modulus) {
        return std::const_pointer_cast<GaloisField>(GaloisField::of_order(q, std::move(modulus)));
      },
      py::arg("q"), py::arg("modulus") = std::nullopt, "GF(q); Conway modulus unless one is given.");

  m.def("simplex_codewords", [](int q) { return words_of(simplex_code(GaloisField::of_order(q))); }, py::arg("q"));
  m.def("hamming_codewords", [](int q) { return words_of(hamming_code(GaloisField::of_order(q))); }, py::arg("q"));
  m.def("simplex_generator", [](int q) { return simplex_code(GaloisField::of_order(q)).generator(); }, py::arg("q"));
  m.def(
      "coset_leaders",
      [](int q) {
        const CosetTable table = cosets(simplex_code(GaloisField::of_order(q)));
        std::vector<std::vector<Elem>> out;
        for (const auto& w : table.leaders()) out.push_back(w.symbols());
        return out;
      },
      py::arg("q"), "Leaders of the simplex-code cosets in (weight, encoding) order.");

  py::class_<MubSet>(m, "MubSet")
      .def(py::init([](int q) { return mub_build(GaloisField::of_order(q)); }), py::arg("q"))
      .def_property_readonly("q", &MubSet::q)
      .def("vector", [](const MubSet& s, int slot, Elem v) { return ComplexVector(s.vector({slot}, v)); },
           py::arg("slot"), py::arg("value"))
      .def("projector", [](const MubSet& s, int slot, Elem v) { return s.projector({slot}, v); }, py::arg("slot"),
           py::arg("value"))
      .def("basis_name", [](const MubSet& s, int slot) { return s.basis_name({slot}); })
      .def("max_deviation", &verify_mub);

  m.def(
      "face_operator",
      [](const MubSet& s, const std::vector<Elem>& values, std::optional<std::vector<int>> bases, bool unit_trace) {
        const FaceLabel label = make_label(s.q(), values, bases);
        return unit_trace ? face_operator_unit_trace(s, label).matrix : face_operator(s, label).matrix;
      },
      py::arg("mubs"), py::arg("values"), py::arg("bases") = std::nullopt, py::arg("unit_trace") = false);

  m.def(
      "jamiolkowski_state",
      [](const MubSet& s, const std::vector<Elem>& values) {
        return jam_state(face_operator(s, FaceLabel::facet(values))).vector;
      },
      py::arg("mubs"), py::arg("values"), "Entry k*q + l.");

  m.def(
      "distances",
      [](int q, const std::vector<Elem>& r, const std::vector<Elem>& s) {
        const auto lr = FaceLabel::facet(r);
        const auto ls = FaceLabel::facet(s);
        py::dict d;
        d["delta"] = hamming_distance(lr, ls);
        d["hs"] = hs_distance(lr, ls);
        d["trace"] = trace_distance(q, lr, ls);
        d["fs"] = fs_distance(q, lr, ls);
        return d;
      },
      py::arg("q"), py::arg("r"), py::arg("s"));

  m.def(
      "conjugate_label",
      [](const MubSet& s, const std::vector<Elem>& values, Elem x, Elem z) {
        return conjugate_label(s, FaceLabel::facet(values), x, z).values;
      },
      py::arg("mubs"), py::arg("values"), py::arg("x"), py::arg("z"));

  m.def(
      "wh_orbit",
      [](const MubSet& s, const std::vector<Elem>& values) {
        std::vector<std::vector<Elem>> out;
        for (const auto& l : wh_orbit(s, FaceLabel::facet(values))) out.push_back(l.values);
        return out;
      },
      py::arg("mubs"), py::arg("values"));

  m.def(
      "purity_stats",
      [](const MubSet& s, std::optional<std::uint64_t> samples, std::uint64_t seed) {
        std::optional<PuritySample> req;
        if (samples) req = PuritySample{*samples, seed};
        const auto st = purity_stats(s, req);
        py::dict d;
        d["average"] = st.average;
        d["lubkin"] = st.lubkin;
        d["standard_error"] = st.standard_error;
        d["count"] = st.count;
        d["exhaustive"] = st.exhaustive;
        return d;
      },
      py::arg("mubs"), py::arg("samples") = std::nullopt, py::arg("seed") = 0);

  m.def(
      "dwf",
      [](const MubSet& s, const ComplexMatrix& rho, std::optional<std::vector<Elem>> leader) {
        const WignerTable t = dwf(DwfSpec(s, std::move(leader)), rho);
        Eigen::MatrixXd out(t.q, t.q);
        for (Elem x = 0; x < static_cast<Elem>(t.q); ++x)
          for (Elem z = 0; z < static_cast<Elem>(t.q); ++z) out(x, z) = t.at(x, z);
        return out;
      },
      py::arg("mubs"), py::arg("rho"), py::arg("leader") = std::nullopt, "q x q table indexed [x, z].");

  m.def(
      "negativity",
      [](const MubSet& s, const ComplexMatrix& rho, std::optional<std::vector<Elem>> leader) {
        return negativity(DwfSpec(s, std::move(leader)), rho);
      },
      py::arg("mubs"), py::arg("rho"), py::arg("leader") = std::nullopt);

  m.def(
      "stab_polytope_min",
      [](const MubSet& s, const ComplexMatrix& rho) {
        const auto rep = stab_polytope_min(s, rho);
        py::dict d;
        d["min"] = rep.minimum;
        d["argmin"] = rep.argmin.values;
        d["member"] = rep.member;
        return d;
      },
      py::arg("mubs"), py::arg("rho"));

  m.def("stabilizer_count", &stabilizer_count, py::arg("p"), py::arg("n"));

  m.def(
      "verify_all",
      [](int q, std::uint64_t seed) { return verify_all(GaloisField::of_order(q), seed).to_json().dump(); },
      py::arg("q"), py::arg("seed") = 0, "Invariant suite report as a JSON string.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one CLI invocation in-process; returns (exit_code, stdout, stderr).");
}
