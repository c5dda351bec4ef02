// Dense multi-qubit state vectors, single-qubit matrices and the basic
// contraction constants (delta = I, epsilon = iY).
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace luinv {

using cd = std::complex<double>;

/// 2x2 complex matrix acting on one qubit, row-major storage.
struct LocalMatrix {
    std::array<cd, 4> m{};

    cd operator()(int row, int col) const { return m[2 * row + col]; }
    cd& operator()(int row, int col) { return m[2 * row + col]; }

    LocalMatrix adjoint() const;
    LocalMatrix transpose() const;
    LocalMatrix conjugate() const;
    bool is_unitary(double tol = 1e-12) const;

    static LocalMatrix identity();
    static LocalMatrix epsilon();  // [[0,1],[-1,0]] = iY
    static LocalMatrix pauli_x();
    static LocalMatrix pauli_y();
    static LocalMatrix pauli_z();
    static LocalMatrix hadamard();
    static LocalMatrix ry(double theta);  // cos(t/2) I - i sin(t/2) Y, real matrix
};

LocalMatrix operator*(const LocalMatrix& a, const LocalMatrix& b);

/// Dense pure state over n qubits.
///
/// Wire 1 is the most significant bit of the amplitude index: the basis
/// label |b1 b2 ... bn> lives at index sum_q b_q 2^(n-q), so printed
/// outcome bitstrings read left to right in wire order are literal binary
/// indices.  Norms below one are allowed; states are immutable values.
class State {
  public:
    explicit State(int n_qubits);  // |0...0>
    State(int n_qubits, std::vector<cd> amplitudes);

    static State basis(int n_qubits, std::uint64_t index);

    int n_qubits() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_; }
    const std::vector<cd>& amplitudes() const { return amps_; }
    cd amplitude(std::uint64_t index) const { return amps_[index]; }
    double norm2() const;

  private:
    int n_;
    std::vector<cd> amps_;
};

/// Applies m on the given wire (1-based), leaving the other factors alone.
State apply_local(const State& state, const LocalMatrix& m, int wire);

/// Moves the content of wire w to wire perm[w-1]; perm must be a bijection
/// on 1..n written 1-based.
State permute_wires(const State& state, const std::vector<int>& perm);

/// <a|b>, conjugate-linear in a.
cd inner(const State& a, const State& b);

std::uint64_t bitstring_to_index(const std::string& bits);
std::string index_to_bitstring(std::uint64_t index, int n_qubits);

}  // namespace luinv
