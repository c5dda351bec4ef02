// Gate-level circuit representation with oracle sub-blocks, the four
// oracle variants and OpenQASM 3 / JSON export.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "luinv/state.hpp"

namespace luinv {

class Circuit;

enum class GateKind { H, X, Y, Ry, Cnot, Swap, Permute, Oracle, Dense };

enum class OracleVariant { U, Adjoint, Transpose, Conjugate };

std::string to_string(OracleVariant v);

/// One gate.  Wires are 1-based.  Oracle gates reference a preparation
/// circuit (or a dense matrix fallback) together with a variant tag; they
/// must be inlined before simulation or QASM export.  Dense gates carry a
/// 2^k x 2^k row-major matrix over their wires.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> wires;
    double angle = 0.0;                              // Ry
    std::vector<int> perm;                           // Permute: content of w -> perm[w-1]
    std::string label;                               // Oracle
    OracleVariant variant = OracleVariant::U;        // Oracle
    std::shared_ptr<const Circuit> prep;             // Oracle, gate-backed
    std::shared_ptr<const std::vector<cd>> matrix;   // Oracle fallback / Dense

    static Gate h(int w);
    static Gate x(int w);
    static Gate y(int w);
    static Gate ry(int w, double angle);
    static Gate cnot(int control, int target);
    static Gate swap(int a, int b);
    static Gate permute(std::vector<int> perm);
    static Gate oracle(std::string label, OracleVariant v, std::vector<int> wires,
                       std::shared_ptr<const Circuit> prep);
    static Gate oracle_dense(std::string label, OracleVariant v, std::vector<int> wires,
                             std::vector<cd> matrix);
    static Gate dense(std::vector<int> wires, std::vector<cd> matrix);
};

/// Ordered gate list over n wires; immutable once built.  Width is capped
/// at 18 wires, the widest circuit this library synthesizes.
class Circuit {
  public:
    explicit Circuit(int n_wires);

    int n_wires() const { return n_; }
    const std::vector<Gate>& gates() const { return gates_; }
    Circuit& add(Gate g);  // validates wires, returns *this for chaining

  private:
    int n_;
    std::vector<Gate> gates_;
};

/// Variant transform of a preparation circuit: Adjoint and Transpose
/// reverse the gate order, Conjugate keeps it; Ry angles flip under
/// transposition and Y picks up a dropped global phase.  The resulting
/// unitary equals the matrix-level transform up to a global phase.
Circuit oracle_variant(const Circuit& prep, OracleVariant v);

/// Replaces every oracle gate by its variant-transformed realization,
/// remapped onto the block wires.  Dense-backed oracles become Dense gates.
Circuit inline_oracles(const Circuit& c);

/// Unitary preparing the given normalized state from |0...0> as a single
/// dense oracle gate (a phased Householder reflection); used for states
/// handed over as raw amplitude arrays without a preparation circuit.
Circuit dense_preparation(const State& psi, const std::string& label = "U_psi");

/// OpenQASM 3 text with one classical bit per wire and a final
/// measure-all; permutation gates are decomposed into swaps.  Oracle gates
/// must have been inlined and dense gates cannot be exported.
std::string to_openqasm(const Circuit& c);

std::string circuit_to_json(const Circuit& c);

/// Circuit plus the target outcome and the scale contract
/// quantity = (2^scale_log2 * p_outcome)^(1/root).
struct MeasuredCircuit {
    Circuit circuit;
    std::string outcome;
    int scale_log2 = 0;
    int root = 1;
    std::string quantity;
};

std::string measured_circuit_to_json(const MeasuredCircuit& mc);

/// Applies the MeasuredCircuit contract to a raw outcome probability.
double extract_value(const MeasuredCircuit& mc, double probability);

/// Dense matrix of a small circuit (intended for widths <= 6), built by
/// running the circuit on every basis state; column j is C|j>.
std::vector<cd> circuit_matrix(const Circuit& c);

}  // namespace luinv
