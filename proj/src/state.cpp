#include "luinv/state.hpp"

#include <cmath>
#include <stdexcept>

namespace luinv {

namespace {
constexpr cd kI{0.0, 1.0};
}

LocalMatrix LocalMatrix::adjoint() const {
    LocalMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

LocalMatrix LocalMatrix::transpose() const {
    LocalMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = (*this)(j, i);
    return r;
}

LocalMatrix LocalMatrix::conjugate() const {
    LocalMatrix r;
    for (int i = 0; i < 4; ++i) r.m[i] = std::conj(m[i]);
    return r;
}

bool LocalMatrix::is_unitary(double tol) const {
    const LocalMatrix p = adjoint() * (*this);
    return std::abs(p(0, 0) - 1.0) < tol && std::abs(p(1, 1) - 1.0) < tol &&
           std::abs(p(0, 1)) < tol && std::abs(p(1, 0)) < tol;
}

LocalMatrix LocalMatrix::identity() { return {{cd{1}, cd{0}, cd{0}, cd{1}}}; }
LocalMatrix LocalMatrix::epsilon() { return {{cd{0}, cd{1}, cd{-1}, cd{0}}}; }
LocalMatrix LocalMatrix::pauli_x() { return {{cd{0}, cd{1}, cd{1}, cd{0}}}; }
LocalMatrix LocalMatrix::pauli_y() { return {{cd{0}, -kI, kI, cd{0}}}; }
LocalMatrix LocalMatrix::pauli_z() { return {{cd{1}, cd{0}, cd{0}, cd{-1}}}; }

LocalMatrix LocalMatrix::hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{cd{s}, cd{s}, cd{s}, cd{-s}}};
}

LocalMatrix LocalMatrix::ry(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return {{cd{c}, cd{-s}, cd{s}, cd{c}}};
}

LocalMatrix operator*(const LocalMatrix& a, const LocalMatrix& b) {
    LocalMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

State::State(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 30)
        throw std::invalid_argument("State: qubit count out of range");
    amps_.assign(std::uint64_t{1} << n_, cd{0});
    amps_[0] = cd{1};
}

State::State(int n_qubits, std::vector<cd> amplitudes) : n_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > 30)
        throw std::invalid_argument("State: qubit count out of range");
    if (amps_.size() != (std::uint64_t{1} << n_))
        throw std::invalid_argument("State: amplitude array must have length 2^n");
}

State State::basis(int n_qubits, std::uint64_t index) {
    State s(n_qubits);
    if (index >= s.dim()) throw std::invalid_argument("State::basis: index out of range");
    s.amps_[0] = cd{0};
    s.amps_[index] = cd{1};
    return s;
}

double State::norm2() const {
    double r = 0.0;
    for (const cd& a : amps_) r += std::norm(a);
    return r;
}

State apply_local(const State& state, const LocalMatrix& m, int wire) {
    const int n = state.n_qubits();
    if (wire < 1 || wire > n) throw std::invalid_argument("apply_local: wire out of range");
    const std::uint64_t mask = std::uint64_t{1} << (n - wire);
    std::vector<cd> a = state.amplitudes();
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        if (i & mask) continue;
        const cd a0 = a[i], a1 = a[i | mask];
        a[i] = m(0, 0) * a0 + m(0, 1) * a1;
        a[i | mask] = m(1, 0) * a0 + m(1, 1) * a1;
    }
    return State(n, std::move(a));
}

State permute_wires(const State& state, const std::vector<int>& perm) {
    const int n = state.n_qubits();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permute_wires: permutation size mismatch");
    std::vector<bool> seen(n + 1, false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[p])
            throw std::invalid_argument("permute_wires: not a bijection on 1..n");
        seen[p] = true;
    }
    const std::vector<cd>& in = state.amplitudes();
    std::vector<cd> out(in.size());
    for (std::uint64_t i = 0; i < in.size(); ++i) {
        std::uint64_t j = 0;
        for (int w = 1; w <= n; ++w) {
            const std::uint64_t bit = (i >> (n - w)) & 1u;
            j |= bit << (n - perm[w - 1]);
        }
        out[j] = in[i];
    }
    return State(n, std::move(out));
}

cd inner(const State& a, const State& b) {
    if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("inner: size mismatch");
    cd r{0};
    for (std::uint64_t i = 0; i < a.dim(); ++i) r += std::conj(a.amplitude(i)) * b.amplitude(i);
    return r;
}

std::uint64_t bitstring_to_index(const std::string& bits) {
    std::uint64_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("bitstring_to_index: bad character");
        idx = (idx << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return idx;
}

std::string index_to_bitstring(std::uint64_t index, int n_qubits) {
    std::string s(n_qubits, '0');
    for (int w = 1; w <= n_qubits; ++w)
        if ((index >> (n_qubits - w)) & 1u) s[w - 1] = '1';
    return s;
}

}  // namespace luinv
