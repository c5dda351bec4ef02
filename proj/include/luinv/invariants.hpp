// Direct tensor-contraction evaluation of the two- and three-qubit
// local-unitary invariants and covariants.
#pragma once

#include <array>
#include <string>

#include "luinv/state.hpp"

namespace luinv {

struct TwoQubitInvariants {
    double n4;  // norm^4
    double c2;  // concurrence squared, 4 |det psi|^2
};

TwoQubitInvariants two_qubit_invariants(const State& state);

/// Quadratic covariant gamma_a, four components indexed (i,i') row-major.
struct GammaTensor {
    int subsystem;            // 1..3
    std::array<cd, 4> comp;   // comp[2*i + i']
    double norm2() const;
};

/// Cubic covariant T, eight components indexed (i,j,k) as binary ijk.
struct TTensor {
    std::array<cd, 8> comp;
    double norm2() const;
};

GammaTensor gamma(const State& state, int subsystem);
TTensor t_tensor(const State& state);

/// Quartic invariant q = -2 Det(psi), Det the 2x2x2 hyperdeterminant.
cd hyperdet_q(const State& state);

struct InvariantSet {
    double n2 = 0;
    double y2 = 0;
    std::array<double, 3> c2{};  // c2[a-1] = concurrence^2 of split a|bc
    std::array<double, 3> g2{};  // g2[a-1] = |gamma_a|^2
    double omega2 = 0;
    double tau2 = 0;
};

InvariantSet three_qubit_invariants(const State& state);

/// Independent route to c2[a] through the reduced density matrix,
/// 4 det(rho_a); agrees with g_b^2 + g_c^2.
double concurrence_sq_from_partial_trace(const State& state, int subsystem);

/// Normal-form parameters: lambda_0 |000> + e^{i theta} lambda_1 |100>
/// + lambda_2 |101> + lambda_3 |110> + lambda_4 |111>.
struct CanonicalParams {
    std::array<double, 5> lambda{};  // each >= 0
    double theta = 0.0;              // in [0, pi]
};

/// Closed-form invariants of the normal form, no state construction.
InvariantSet canonical_invariants(const CanonicalParams& p);

/// Flat JSON object with keys n2, y2, c2_1..c2_3, g2_1..g2_3, omega2, tau2.
std::string invariant_set_to_json(const InvariantSet& inv);
InvariantSet invariant_set_from_json(const std::string& text);

}  // namespace luinv
