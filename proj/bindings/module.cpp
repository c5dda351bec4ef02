// Python bindings for the main operations: states, invariants, circuit
// synthesis, simulation and SLOCC classification.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "luinv/classify.hpp"
#include "luinv/cli.hpp"
#include "luinv/invariants.hpp"
#include "luinv/simulator.hpp"
#include "luinv/states.hpp"
#include "luinv/synthesis.hpp"

namespace py = pybind11;
using namespace luinv;

namespace {

FamilyId family_from_name(const std::string& name) {
    if (name == "onecut") return FamilyId::OneCut;
    if (name == "w") return FamilyId::W;
    if (name == "ghz") return FamilyId::GHZ;
    throw std::invalid_argument("family must be onecut|w|ghz");
}

CanonicalParams params_from_args(const std::vector<double>& lambdas, double theta) {
    if (lambdas.size() != 5) throw std::invalid_argument("expected five lambda values");
    CanonicalParams p;
    for (int i = 0; i < 5; ++i) p.lambda[i] = lambdas[i];
    p.theta = theta;
    return p;
}

py::dict invariant_dict(const InvariantSet& inv) {
    py::dict d;
    d["n2"] = inv.n2;
    d["y2"] = inv.y2;
    for (int a = 0; a < 3; ++a) {
        d[py::str("c2_" + std::to_string(a + 1))] = inv.c2[a];
        d[py::str("g2_" + std::to_string(a + 1))] = inv.g2[a];
    }
    d["omega2"] = inv.omega2;
    d["tau2"] = inv.tau2;
    return d;
}

}  // namespace

PYBIND11_MODULE(_luinv, m) {
    m.doc() = "local-unitary invariants of two- and three-qubit states";
    m.attr("__version__") = cli::kToolVersion;

    py::class_<State>(m, "State")
        .def(py::init<int>(), py::arg("n_qubits"))
        .def(py::init<int, std::vector<cd>>(), py::arg("n_qubits"), py::arg("amplitudes"))
        .def_property_readonly("n_qubits", &State::n_qubits)
        .def_property_readonly("amplitudes",
                               [](const State& s) { return s.amplitudes(); })
        .def("norm2", &State::norm2)
        .def("__repr__", [](const State& s) {
            return "<State n_qubits=" + std::to_string(s.n_qubits()) + ">";
        });

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("n_wires", &Circuit::n_wires)
        .def_property_readonly("n_gates",
                               [](const Circuit& c) { return c.gates().size(); })
        .def("openqasm", [](const Circuit& c) { return to_openqasm(inline_oracles(c)); })
        .def("to_json", &circuit_to_json)
        .def("__repr__", [](const Circuit& c) {
            return "<Circuit n_wires=" + std::to_string(c.n_wires()) + " gates=" +
                   std::to_string(c.gates().size()) + ">";
        });

    py::class_<MeasuredCircuit>(m, "MeasuredCircuit")
        .def_readonly("circuit", &MeasuredCircuit::circuit)
        .def_readonly("outcome", &MeasuredCircuit::outcome)
        .def_readonly("scale_log2", &MeasuredCircuit::scale_log2)
        .def_readonly("root", &MeasuredCircuit::root)
        .def_readonly("quantity", &MeasuredCircuit::quantity)
        .def("to_json", &measured_circuit_to_json)
        .def("__repr__", [](const MeasuredCircuit& mc) {
            return "<MeasuredCircuit " + mc.quantity + " = (2^" +
                   std::to_string(mc.scale_log2) + " * p_" + mc.outcome + ")^(1/" +
                   std::to_string(mc.root) + ")>";
        });

    py::class_<InvariantEstimate>(m, "InvariantEstimate")
        .def_readonly("value", &InvariantEstimate::value)
        .def_readonly("std_error", &InvariantEstimate::std_error)
        .def_readonly("raw_probability", &InvariantEstimate::raw_probability)
        .def_readonly("quantity", &InvariantEstimate::quantity);

    // states
    m.def("family_state",
          [](const std::string& f, double theta) { return family_state(family_from_name(f), theta); },
          py::arg("family"), py::arg("theta"));
    m.def("family_circuit",
          [](const std::string& f, double theta) { return family_circuit(family_from_name(f), theta); },
          py::arg("family"), py::arg("theta"));
    m.def("representative_theta",
          [](const std::string& f) { return representative_theta(family_from_name(f)); },
          py::arg("family"));
    m.def("canonical_state",
          [](const std::vector<double>& lambdas, double theta) {
              return canonical_state(params_from_args(lambdas, theta));
          },
          py::arg("lambdas"), py::arg("theta") = 0.0);
    m.def("random_state", &random_state, py::arg("n_qubits"), py::arg("seed"));
    m.def("random_lu_orbit", &random_lu_orbit, py::arg("state"), py::arg("seed"),
          py::arg("y_rotations_only") = false);
    m.def("dense_preparation", &dense_preparation, py::arg("state"),
          py::arg("label") = std::string("U_psi"));

    // invariants
    m.def("two_qubit_invariants", [](const State& s) {
        const auto inv = two_qubit_invariants(s);
        py::dict d;
        d["n4"] = inv.n4;
        d["c2"] = inv.c2;
        return d;
    });
    m.def("three_qubit_invariants",
          [](const State& s) { return invariant_dict(three_qubit_invariants(s)); });
    m.def("canonical_invariants",
          [](const std::vector<double>& lambdas, double theta) {
              return invariant_dict(canonical_invariants(params_from_args(lambdas, theta)));
          },
          py::arg("lambdas"), py::arg("theta") = 0.0);
    m.def("hyperdet_q", &hyperdet_q);
    m.def("exact_family_invariants", [](const std::string& f, double theta) {
        const FamilyInvariants inv = exact_family_invariants(family_from_name(f), theta);
        py::dict d;
        for (int a = 0; a < 3; ++a) d[py::str("c2_" + std::to_string(a + 1))] = inv.c2[a];
        d["omega2"] = inv.omega2;
        d["tau2"] = inv.tau2;
        return d;
    });

    // synthesis
    m.def("build_small",
          [](const std::string& target, const Circuit& prep, int axis) {
              return build_small(target_from_string(target), prep, axis);
          },
          py::arg("target"), py::arg("prep"), py::arg("axis") = 1);
    m.def("build_bell",
          [](const std::string& target, const Circuit& prep, const std::string& form) {
              return build_bell(target_from_string(target), prep, cli::form_from_string(form));
          },
          py::arg("target"), py::arg("prep"), py::arg("form") = "perm");
    m.def("bell_scale_check",
          [](const std::string& target) { return bell_scale_check(target_from_string(target)); });
    m.def("target_oracle_value", [](const std::string& target, const State& psi) {
        return target_oracle_value(target_from_string(target), psi);
    });

    // simulation (oracle blocks are inlined on entry)
    m.def("run", [](const Circuit& c) { return run(inline_oracles(c)); });
    m.def("outcome_probability", [](const Circuit& c, const std::string& outcome) {
        return outcome_probability(inline_oracles(c), outcome);
    });
    m.def("sample",
          [](const Circuit& c, long long shots, std::uint64_t seed) {
              const ShotResult sr = sample(inline_oracles(c), shots, seed);
              py::dict d;
              for (const auto& [bits, count] : sr.counts) d[py::str(bits)] = count;
              return d;
          },
          py::arg("circuit"), py::arg("shots"), py::arg("seed") = 0);
    m.def("estimate_invariant", &estimate_invariant, py::arg("measured_circuit"),
          py::arg("shots"), py::arg("seed") = 0);
    m.def("exact_estimate", &exact_estimate, py::arg("measured_circuit"));

    // classification
    m.def("classify",
          [](const py::dict& inv, double tol) {
              InvariantSet set;
              set.n2 = inv["n2"].cast<double>();
              set.y2 = inv["y2"].cast<double>();
              for (int a = 0; a < 3; ++a) {
                  set.c2[a] = inv[py::str("c2_" + std::to_string(a + 1))].cast<double>();
                  set.g2[a] = inv[py::str("g2_" + std::to_string(a + 1))].cast<double>();
              }
              set.omega2 = inv["omega2"].cast<double>();
              set.tau2 = inv["tau2"].cast<double>();
              const Classification r = classify(set, tol);
              py::dict d;
              d["slocc_class"] = to_string(r.cls);
              d["consistent"] = r.consistent;
              d["diagnostics"] = r.diagnostics;
              return d;
          },
          py::arg("invariants"), py::arg("tol") = 1e-9);
}
