// Compilation of each target invariant into the two direct-measurement
// circuit methods: the small transpose/adjoint-oracle circuits and the
// doubled Bell-contraction circuits (permutation or CNOT-ladder form).
#pragma once

#include <string>

#include "luinv/circuit.hpp"
#include "luinv/state.hpp"

namespace luinv {

enum class TargetKind { Norm4_2q, Conc2_2q, Norm4_3q, Tau2, G4, C4, Omega4 };

/// Target invariant; subsystem (1..3) selects the split for G4 and C4.
struct InvariantTarget {
    TargetKind kind;
    int subsystem = 0;

    static InvariantTarget norm4_2q() { return {TargetKind::Norm4_2q}; }
    static InvariantTarget conc2_2q() { return {TargetKind::Conc2_2q}; }
    static InvariantTarget norm4_3q() { return {TargetKind::Norm4_3q}; }
    static InvariantTarget tau2() { return {TargetKind::Tau2}; }
    static InvariantTarget g4(int a) { return {TargetKind::G4, a}; }
    static InvariantTarget c4(int a) { return {TargetKind::C4, a}; }
    static InvariantTarget omega4() { return {TargetKind::Omega4}; }
};

std::string to_string(const InvariantTarget& t);
InvariantTarget target_from_string(const std::string& name);

/// Number of qubits of the states a target applies to (2 or 3).
int target_state_qubits(const InvariantTarget& t);

enum class BellForm { Permutation, CnotLadder };

/// Method I: transpose/adjoint oracles on n*k/4 wires.  For Tau2 and
/// Omega4 the contraction may be routed through subsystem `axis` (1..3);
/// the measured probability is axis-independent.
MeasuredCircuit build_small(const InvariantTarget& t, const Circuit& prep, int axis = 1);

/// Method II: state copies plus Bell contractions on n*k/2 wires, either
/// with a wire permutation in front of adjacent Bell gates or as a CNOT
/// ladder followed by Hadamards on the controls.
MeasuredCircuit build_bell(const InvariantTarget& t, const Circuit& prep, BellForm form);

/// Number of Bell contractions of the target's Method II circuit; always
/// equals the gap between the Bell and small scale exponents.
int bell_scale_check(const InvariantTarget& t);

/// Ground truth by direct contraction: the value the measured circuits
/// expose as 2^k * p, i.e. n^4, c^2, tau^2, g_a^4, c_a^4 or omega^4.
double target_oracle_value(const InvariantTarget& t, const State& psi);

}  // namespace luinv
