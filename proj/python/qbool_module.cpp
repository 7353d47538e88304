#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbool/build.hpp"
#include "qbool/dynamics.hpp"
#include "qbool/fkn.hpp"
#include "qbool/fourier.hpp"
#include "qbool/influence.hpp"
#include "qbool/learning.hpp"
#include "qbool/noise.hpp"
#include "qbool/testing.hpp"

namespace py = pybind11;
using namespace qbool;

namespace {

DenseOperator as_operator(const Matrix& m, double tol) {
  return DenseOperator::from_matrix(m, tol);
}

py::dict spectrum_dict(const Spectrum& spec) {
  py::dict out;
  for (const auto& [s, c] : spec) {
    if (spec.real_coefficients())
      out[py::str(s.str())] = c.real();
    else
      out[py::str(s.str())] = c;
  }
  return out;
}

Spectrum spectrum_from_dict(int n, const py::dict& d) {
  std::vector<Spectrum::Entry> entries;
  bool real = true;
  for (const auto& item : d) {
    const PauliString s = PauliString::parse(item.first.cast<std::string>());
    const Complex c = item.second.cast<Complex>();
    if (c.imag() != 0.0) real = false;
    entries.emplace_back(s, c);
  }
  return Spectrum::from_entries(n, real, std::move(entries));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "numerical laboratory for quantum boolean functions";

  m.def("pauli_matrix",
        [](const std::string& word) { return pauli_matrix(PauliString::parse(word)); },
        py::arg("word"), "Dense matrix of the Pauli word, e.g. 'XZI'.");

  m.def("spectrum",
        [](const Matrix& f, double tol) {
          return spectrum_dict(fourier_transform(as_operator(f, tol), tol));
        },
        py::arg("f"), py::arg("tol") = kDefaultTol,
        "Pauli-basis Fourier coefficients as a dict keyed by IXYZ words.");

  m.def("from_spectrum",
        [](int n, const py::dict& coeffs) {
          return inverse_fourier(spectrum_from_dict(n, coeffs)).mat;
        },
        py::arg("n"), py::arg("coeffs"), "Dense matrix from a coefficient dict.");

  m.def("inner_product",
        [](const Matrix& f, const Matrix& g, double tol) {
          return inner_product(as_operator(f, tol), as_operator(g, tol));
        },
        py::arg("f"), py::arg("g"), py::arg("tol") = kDefaultTol);

  m.def("schatten_norm", [](const Matrix& f, double p) { return schatten_norm(f, p); },
        py::arg("f"), py::arg("p"), "Normalized Schatten p-norm (inf allowed).");

  m.def("is_quantum_boolean",
        [](const Matrix& f, double tol) {
          return is_quantum_boolean(DenseOperator::from_matrix(f, tol), tol);
        },
        py::arg("f"), py::arg("tol") = kDefaultTol);

  m.def("degree",
        [](const Matrix& f, double tol) {
          return fourier_transform(as_operator(f, tol), tol).degree();
        },
        py::arg("f"), py::arg("tol") = kDefaultTol);

  m.def("weight_per_level",
        [](const Matrix& f, double tol) {
          return fourier_transform(as_operator(f, tol), tol).weight_per_level();
        },
        py::arg("f"), py::arg("tol") = kDefaultTol);

  // constructors
  m.def("phase_oracle",
        [](const std::string& bits) { return phase_oracle(TruthTable::parse(bits)).mat; },
        py::arg("bits"));
  m.def("bit_oracle",
        [](const std::string& bits) { return bit_oracle(TruthTable::parse(bits)).mat; },
        py::arg("bits"));
  m.def("projector_qbf",
        [](const Matrix& p, double tol) { return projector_qbf(as_operator(p, tol), tol).mat; },
        py::arg("p"), py::arg("tol") = kDefaultTol);
  m.def("sign_function",
        [](const Matrix& h, double tol) { return sign_function(as_operator(h, tol), tol).mat; },
        py::arg("h"), py::arg("tol") = kDefaultTol);
  m.def("anticommuting_combination",
        [](const std::vector<double>& alphas, const std::vector<Matrix>& fs, double tol) {
          std::vector<DenseOperator> ops;
          ops.reserve(fs.size());
          for (const auto& f : fs) ops.push_back(as_operator(f, tol));
          return anticommuting_combination(alphas, ops, tol).mat;
        },
        py::arg("alphas"), py::arg("fs"), py::arg("tol") = kDefaultTol);
  m.def("spin_flip",
        [](const Matrix& f, int qubit, double tol) {
          return spin_flip(as_operator(f, tol), qubit).mat;
        },
        py::arg("f"), py::arg("qubit"), py::arg("tol") = kDefaultTol);
  m.def("balance",
        [](const Matrix& f, double tol) { return balance(as_operator(f, tol), tol).mat; },
        py::arg("f"), py::arg("tol") = kDefaultTol);

  // property tests
  m.def("stabilizer_test_probability",
        [](const Matrix& f, double tol) {
          return stabilizer_test_probability(as_operator(f, tol), tol);
        },
        py::arg("f"), py::arg("tol") = kDefaultTol);
  m.def("stabilizer_test_sample",
        [](const Matrix& f, long long trials, std::uint64_t seed, double tol) {
          const SampleReport rep = stabilizer_test_sample(as_operator(f, tol), trials, seed, tol);
          py::dict out;
          out["exact_probability"] = rep.exact_probability;
          out["accepted"] = rep.accepted;
          out["trials"] = rep.trials;
          out["fraction"] = rep.fraction();
          out["seed"] = rep.seed;
          return out;
        },
        py::arg("f"), py::arg("trials"), py::arg("seed"), py::arg("tol") = kDefaultTol);
  m.def("hastad_test_probability",
        [](const Matrix& f, double delta, double tol) {
          return hastad_test_probability(as_operator(f, tol), delta, tol);
        },
        py::arg("f"), py::arg("delta"), py::arg("tol") = kDefaultTol);
  m.def("locality_test_probability",
        [](const Matrix& f, int max_qubits, double tol) {
          return locality_test_probability(as_operator(f, tol), max_qubits, tol);
        },
        py::arg("f"), py::arg("max_qubits") = 6, py::arg("tol") = kDefaultTol);
  m.def("discrimination_probability",
        [](const Matrix& f1, const Matrix& f2, double tol) {
          return discrimination_probability(as_operator(f1, tol), as_operator(f2, tol), tol);
        },
        py::arg("f1"), py::arg("f2"), py::arg("tol") = kDefaultTol);

  // learning
  py::class_<OracleHandle>(m, "Oracle", "simulated black-box access to an operator")
      .def(py::init([](const Matrix& f, std::uint64_t seed, bool exact, double tol) {
             return OracleHandle(as_operator(f, tol), seed, exact, tol);
           }),
           py::arg("f"), py::arg("seed"), py::arg("exact") = false,
           py::arg("tol") = kDefaultTol)
      .def_property_readonly("query_count", &OracleHandle::query_count)
      .def("bell_sample", [](OracleHandle& o) { return o.bell_sample().str(); })
      .def("robust_identify",
           [](OracleHandle& o, double eps, double delta) -> std::optional<std::string> {
             const auto s = o.robust_identify(eps, delta);
             if (!s) return std::nullopt;
             return s->str();
           },
           py::arg("epsilon"), py::arg("delta"))
      .def("estimate_coefficient",
           [](OracleHandle& o, const std::string& word, double eta, double delta) {
             return o.estimate_coefficient(PauliString::parse(word), eta, delta);
           },
           py::arg("word"), py::arg("eta"), py::arg("delta"))
      .def("estimate_weight",
           [](OracleHandle& o, const std::string& prefix, double gamma, double delta) {
             const auto est = o.estimate_weight(
                 IndicatorString::prefix(o.qubits(), PauliString::parse(prefix).word()), gamma,
                 delta);
             return py::make_tuple(est.value, est.radius, est.confidence, est.queries_used);
           },
           py::arg("prefix"), py::arg("gamma"), py::arg("delta"));

  m.def("goldreich_levin",
        [](const Matrix& f, double gamma, double delta, std::uint64_t seed, bool exact,
           double tol) {
          OracleHandle oracle(as_operator(f, tol), seed, exact, tol);
          const GlResult res = goldreich_levin(oracle, gamma, delta);
          py::dict list;
          for (const auto& [s, c] : res.coefficients) list[py::str(s.str())] = c;
          py::dict out;
          out["list"] = list;
          out["estimations"] = res.estimations;
          out["queries"] = res.queries;
          out["max_list_size"] = res.max_list_size;
          return out;
        },
        py::arg("f"), py::arg("gamma"), py::arg("delta"), py::arg("seed"),
        py::arg("exact") = false, py::arg("tol") = kDefaultTol);

  // noise
  m.def("apply_noise",
        [](const Matrix& f, double epsilon, double tol) {
          return inverse_fourier(apply_noise(fourier_transform(as_operator(f, tol), tol), epsilon))
              .mat;
        },
        py::arg("f"), py::arg("epsilon"), py::arg("tol") = kDefaultTol);
  m.def("depolarize",
        [](const Matrix& f, double epsilon, double tol) {
          return depolarize(as_operator(f, tol), epsilon).mat;
        },
        py::arg("f"), py::arg("epsilon"), py::arg("tol") = kDefaultTol);
  m.def("hypercontractivity_check",
        [](const Matrix& f, double p, double q, double epsilon, double tol) {
          const HyperReport rep = hypercontractivity_check(as_operator(f, tol), p, q, epsilon, tol);
          py::dict out;
          out["input_norm"] = rep.input_norm;
          out["noisy_norm"] = rep.noisy_norm;
          out["margin"] = rep.margin;
          out["in_theorem_regime"] = rep.in_theorem_regime;
          return out;
        },
        py::arg("f"), py::arg("p"), py::arg("q"), py::arg("epsilon"),
        py::arg("tol") = kDefaultTol);

  // influence
  m.def("influences",
        [](const Matrix& f, double tol) {
          return influences(fourier_transform(as_operator(f, tol), tol));
        },
        py::arg("f"), py::arg("tol") = kDefaultTol);
  m.def("total_influence",
        [](const Matrix& f, double tol) { return total_influence(as_operator(f, tol)); },
        py::arg("f"), py::arg("tol") = kDefaultTol);
  m.def("variance",
        [](const Matrix& f, double tol) { return variance(as_operator(f, tol), tol); },
        py::arg("f"), py::arg("tol") = kDefaultTol);

  // fkn
  m.def("high_level_weight",
        [](const Matrix& f, double tol) { return high_level_weight(as_operator(f, tol), tol); },
        py::arg("f"), py::arg("tol") = kDefaultTol);
  m.def("nearest_dictator",
        [](const Matrix& f, double tol) {
          const DictatorSearch d = nearest_dictator(as_operator(f, tol), tol);
          py::dict out;
          out["found"] = d.found;
          out["qubit"] = d.qubit;
          out["distance"] = d.distance;
          out["balanced_first"] = d.balanced_first;
          if (d.found) out["dictator"] = d.dictator.mat;
          return out;
        },
        py::arg("f"), py::arg("tol") = kDefaultTol);

  // dynamics
  py::class_<ChainHamiltonian>(m, "Chain", "nearest-neighbour chain Hamiltonian")
      .def(py::init([](int n, std::uint64_t seed, double norm_cap) {
             Rng rng(seed);
             return ChainHamiltonian::random(n, rng, norm_cap);
           }),
           py::arg("n"), py::arg("seed"), py::arg("norm_cap") = 1.0)
      .def_readonly("n", &ChainHamiltonian::n)
      .def("dense", [](const ChainHamiltonian& h) { return h.dense().mat; })
      .def("evolve",
           [](const ChainHamiltonian& h, int qubit, int symbol, double t) {
             return evolve_observable(h, qubit, symbol, t).mat;
           },
           py::arg("qubit"), py::arg("symbol"), py::arg("t"))
      .def("profile",
           [](const ChainHamiltonian& h, int qubit, int symbol, double t,
              const std::vector<int>& radii) {
             std::vector<py::dict> out;
             for (const auto& p : lieb_robinson_profile(h, qubit, symbol, t, radii)) {
               py::dict row;
               row["radius"] = p.radius;
               row["window_size"] = p.window_size;
               row["discrepancy"] = p.discrepancy;
               out.push_back(row);
             }
             return out;
           },
           py::arg("qubit"), py::arg("symbol"), py::arg("t"), py::arg("radii"))
      .def("learn",
           [](const ChainHamiltonian& h, int qubit, int symbol, double t, double gamma,
              double epsilon, double delta, std::uint64_t seed) {
             const LearnDynamicsResult r =
                 learn_dynamics(h, qubit, symbol, t, gamma, epsilon, delta, seed);
             py::dict out;
             out["estimate"] = r.estimate.mat;
             out["error_sq"] = r.error_sq;
             out["queries"] = r.queries;
             return out;
           },
           py::arg("qubit"), py::arg("symbol"), py::arg("t"), py::arg("gamma"),
           py::arg("epsilon"), py::arg("delta"), py::arg("seed"));
}
