// Copyright 2026 The ZZZY Authors
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

// Thin Python surface. Pauli operators cross the boundary as label strings
// ("Z1 Y4"), syndromes as lists of 0/1 in generator-row order.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "zzzy/analysis.h"
#include "zzzy/channel.h"
#include "zzzy/code.h"
#include "zzzy/decoder.h"
#include "zzzy/monte_carlo.h"

namespace py = pybind11;
using namespace zzzy;

namespace {

std::vector<int> to_list(const Syndrome& s) {
  std::vector<int> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i] = s[i] ? 1 : 0;
  }
  return out;
}

Syndrome from_list(const StabilizerCode& code, const std::vector<int>& bits) {
  if (bits.size() != code.num_generators()) {
    throw std::invalid_argument("syndrome length does not match the code");
  }
  Syndrome s{BitVector(bits.size())};
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) {
      s.bits.flip(i);
    }
  }
  return s;
}

SharedQubitRule shared_rule(const std::string& name) {
  if (name == "neutral") {
    return SharedQubitRule::kNeutral;
  }
  if (name == "activation") {
    return SharedQubitRule::kActivationWins;
  }
  throw std::invalid_argument("shared_qubit must be 'neutral' or 'activation'");
}

Decoder make(const StabilizerCode& code, const std::string& variant, const std::string& shared,
             std::optional<uint64_t> seed) {
  const DecoderVariant v = parse_variant(variant);
  DecoderOptions options;
  options.update_weights = v != DecoderVariant::kPlainMatching;
  options.guard_weight_update = v != DecoderVariant::kUnguarded;
  options.shared_qubit = shared_rule(shared);
  options.tie_break_seed = seed;
  return Decoder(code, options);
}

py::dict decode_dict(const Decoder& decoder, const PauliOperator& e) {
  const auto& code = decoder.code();
  const auto r = decoder.decode(syndrome(code, e));
  py::dict out;
  out["correction"] = r.e_hat.str();
  out["residual_class"] = std::string(residual_class_name(residual_class(e, r, code)));
  out["weights"] = r.weights.q;
  out["flipped_rows"] = r.flipped_rows;
  out["weight_update_discarded"] = r.weight_update_discarded;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matching decoder for ZZZY and related surface codes";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<StabilizerCode>(m, "Code")
      .def(py::init([](const std::string& family, int d) {
             return build_code(parse_family(family), d);
           }),
           py::arg("family"), py::arg("distance"))
      .def_property_readonly("family",
                             [](const StabilizerCode& c) { return std::string(family_name(c.family())); })
      .def_property_readonly("distance", &StabilizerCode::distance)
      .def_property_readonly("t", &StabilizerCode::t)
      .def_property_readonly("num_qubits", &StabilizerCode::num_qubits)
      .def_property_readonly("num_generators", &StabilizerCode::num_generators)
      .def_property_readonly("n_zy", &StabilizerCode::n_zy)
      .def_property_readonly("n_x", &StabilizerCode::n_x)
      .def_property_readonly("generators",
                             [](const StabilizerCode& c) {
                               std::vector<std::string> out;
                               for (const auto& g : c.generators()) {
                                 out.push_back(g.str());
                               }
                               return out;
                             })
      .def_property_readonly("logical_x", [](const StabilizerCode& c) { return c.logical_x().str(); })
      .def_property_readonly("logical_z", [](const StabilizerCode& c) { return c.logical_z().str(); })
      .def("dump", &StabilizerCode::dump)
      .def("syndrome",
           [](const StabilizerCode& c, const std::string& error) {
             return to_list(syndrome(c, PauliOperator::parse(error, c.num_qubits())));
           },
           py::arg("error"))
      .def("__repr__", [](const StabilizerCode& c) {
        return "<Code " + std::string(family_name(c.family())) + " d=" +
               std::to_string(c.distance()) + ">";
      });

  py::class_<Decoder>(m, "Decoder")
      .def(py::init(&make), py::arg("code"), py::arg("variant") = "standard",
           py::arg("shared_qubit") = "neutral", py::arg("tie_break_seed") = py::none())
      .def_property_readonly("code", &Decoder::code)
      .def("decode",
           [](const Decoder& d, const std::string& error) {
             return decode_dict(d, PauliOperator::parse(error, d.code().num_qubits()));
           },
           py::arg("error"), "Decode the syndrome of `error`; reports the correction and residual.")
      .def("correct",
           [](const Decoder& d, const std::vector<int>& bits) {
             return d.correct(from_list(d.code(), bits)).str();
           },
           py::arg("syndrome"), py::call_guard<py::gil_scoped_release>());

  m.def(
      "enumerate_fractions",
      [](const Decoder& decoder, int j, unsigned workers, uint64_t budget) {
        EnumerationOptions options;
        options.workers = workers;
        options.budget = budget;
        FractionTable table;
        {
          py::gil_scoped_release release;
          table = enumerate_fractions(decoder, j, options);
        }
        py::list out;
        for (const auto& e : table.entries) {
          py::dict row;
          row["class"] = e.label();
          row["num_z"] = e.num_z;
          row["num_x"] = e.num_x;
          row["num_y"] = e.num_y;
          row["failures"] = e.failures;
          row["patterns"] = e.patterns;
          row["fraction"] = e.fraction();
          out.append(row);
        }
        return out;
      },
      py::arg("decoder"), py::arg("j"), py::arg("workers") = 1,
      py::arg("budget") = uint64_t{1'000'000'000},
      "Exhaustive failure fractions per error class for weight-j patterns.");

  m.def("lemma1_count", &lemma1_count, py::arg("d"), py::arg("t"));

  m.def(
      "weight_enumerator",
      [](const StabilizerCode& code) { return weight_enumerator(code).coefficients; },
      py::arg("code"));

  m.def(
      "simulate",
      [](const std::string& family, int d, double p, double asymmetry, uint64_t trials,
         uint64_t seed, const std::string& variant, unsigned workers) {
        TrialConfig cfg;
        cfg.family = parse_family(family);
        cfg.distance = d;
        cfg.p = p;
        cfg.asymmetry = asymmetry;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.variant = parse_variant(variant);
        SimResult r;
        {
          py::gil_scoped_release release;
          r = run(cfg, workers);
        }
        py::dict out;
        out["trials"] = r.trials();
        out["failures"] = r.failures();
        out["fail_x"] = r.fail_x;
        out["fail_y"] = r.fail_y;
        out["fail_z"] = r.fail_z;
        out["pl"] = r.pl;
        out["ci"] = py::make_tuple(r.ci_lo, r.ci_hi);
        return out;
      },
      py::arg("family"), py::arg("distance"), py::arg("p"), py::arg("asymmetry") = 1.0,
      py::arg("trials") = uint64_t{100000}, py::arg("seed") = uint64_t{1},
      py::arg("variant") = "standard", py::arg("workers") = 1u);
}
