// One-parameter state families, their preparation circuits, the
// normal-form construction and random local-unitary orbit sampling.
#pragma once

#include <array>
#include <cstdint>

#include "luinv/circuit.hpp"
#include "luinv/invariants.hpp"
#include "luinv/state.hpp"

namespace luinv {

enum class FamilyId { OneCut, W, GHZ };

std::string to_string(FamilyId f);

/// OneCut: cos(t/2)|000> + sin(t/2)|011>
/// W:      cos(t/2)|100> + sin(t/2)(|010> + |001>)/sqrt(2)
/// GHZ:    cos(t/2)|000> + sin(t/2)|111>
State family_state(FamilyId f, double theta);

/// Three-wire preparation circuit over {Ry, H, X, CNOT} mapping |000> to
/// family_state(f, theta); the W family realizes its controlled-H step as
/// Ry(pi/4) . CNOT . Ry(-pi/4).
Circuit family_circuit(FamilyId f, double theta);

/// theta at which the family passes through the usual class representative.
double representative_theta(FamilyId f);

State canonical_state(const CanonicalParams& p);

struct LocalUnitaryTriple {
    std::array<LocalMatrix, 3> u;
};

/// Haar-random single-qubit unitaries (or plain y-rotations by uniform
/// random angles when y_rotations_only is set); deterministic per seed.
LocalUnitaryTriple random_local_triple(std::uint64_t seed, bool y_rotations_only = false);

State apply_local_triple(const State& state, const LocalUnitaryTriple& t);

State random_lu_orbit(const State& state, std::uint64_t seed, bool y_rotations_only = false);

/// Normalized state with complex Gaussian amplitudes; deterministic per seed.
State random_state(int n_qubits, std::uint64_t seed);

/// Closed-form values of the measurable invariants along the families.
struct FamilyInvariants {
    std::array<double, 3> c2{};
    double omega2 = 0.0;
    double tau2 = 0.0;
};

FamilyInvariants exact_family_invariants(FamilyId f, double theta);

}  // namespace luinv
