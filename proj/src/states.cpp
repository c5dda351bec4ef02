#include "luinv/states.hpp"

#include <cmath>
#include <stdexcept>

#include "luinv/rng.hpp"

namespace luinv {

std::string to_string(FamilyId f) {
    switch (f) {
        case FamilyId::OneCut: return "onecut";
        case FamilyId::W: return "w";
        case FamilyId::GHZ: return "ghz";
    }
    return "?";
}

State family_state(FamilyId f, double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    std::vector<cd> a(8, cd{0});
    switch (f) {
        case FamilyId::OneCut:
            a[0b000] = c;
            a[0b011] = s;
            break;
        case FamilyId::W:
            a[0b100] = c;
            a[0b010] = s / std::sqrt(2.0);
            a[0b001] = s / std::sqrt(2.0);
            break;
        case FamilyId::GHZ:
            a[0b000] = c;
            a[0b111] = s;
            break;
    }
    return State(3, std::move(a));
}

Circuit family_circuit(FamilyId f, double theta) {
    Circuit c(3);
    switch (f) {
        case FamilyId::OneCut:
            c.add(Gate::ry(2, theta)).add(Gate::cnot(2, 3));
            break;
        case FamilyId::W:
            c.add(Gate::ry(1, theta));
            c.add(Gate::ry(2, M_PI / 4.0)).add(Gate::cnot(1, 2)).add(Gate::ry(2, -M_PI / 4.0));
            c.add(Gate::cnot(2, 3)).add(Gate::cnot(1, 2)).add(Gate::x(1));
            break;
        case FamilyId::GHZ:
            c.add(Gate::ry(1, theta)).add(Gate::cnot(1, 2)).add(Gate::cnot(1, 3));
            break;
    }
    return c;
}

double representative_theta(FamilyId f) {
    switch (f) {
        case FamilyId::OneCut: return 2.0 * std::acos(1.0 / std::sqrt(2.0));
        case FamilyId::W: return 2.0 * std::acos(1.0 / std::sqrt(3.0));
        case FamilyId::GHZ: return 2.0 * std::acos(1.0 / std::sqrt(2.0));
    }
    throw std::logic_error("representative_theta: bad family");
}

State canonical_state(const CanonicalParams& p) {
    for (double l : p.lambda)
        if (l < 0.0) throw std::invalid_argument("canonical_state: lambda must be >= 0");
    std::vector<cd> a(8, cd{0});
    a[0b000] = p.lambda[0];
    a[0b100] = std::polar(p.lambda[1], p.theta);
    a[0b101] = p.lambda[2];
    a[0b110] = p.lambda[3];
    a[0b111] = p.lambda[4];
    return State(3, std::move(a));
}

namespace {

LocalMatrix haar_unitary(Rng& rng) {
    // Gram-Schmidt on two complex Gaussian columns.
    cd a{rng.normal(), rng.normal()}, b{rng.normal(), rng.normal()};
    cd c{rng.normal(), rng.normal()}, d{rng.normal(), rng.normal()};
    double n1 = std::sqrt(std::norm(a) + std::norm(b));
    while (n1 < 1e-12) {
        a = {rng.normal(), rng.normal()};
        b = {rng.normal(), rng.normal()};
        n1 = std::sqrt(std::norm(a) + std::norm(b));
    }
    a /= n1;
    b /= n1;
    const cd ov = std::conj(a) * c + std::conj(b) * d;
    c -= ov * a;
    d -= ov * b;
    const double n2 = std::sqrt(std::norm(c) + std::norm(d));
    if (n2 < 1e-12) return haar_unitary(rng);
    c /= n2;
    d /= n2;
    LocalMatrix u;
    u(0, 0) = a;
    u(1, 0) = b;
    u(0, 1) = c;
    u(1, 1) = d;
    return u;
}

}  // namespace

LocalUnitaryTriple random_local_triple(std::uint64_t seed, bool y_rotations_only) {
    Rng rng(seed);
    LocalUnitaryTriple t;
    for (int i = 0; i < 3; ++i)
        t.u[i] = y_rotations_only ? LocalMatrix::ry(rng.uniform(0.0, 2.0 * M_PI))
                                  : haar_unitary(rng);
    return t;
}

State apply_local_triple(const State& state, const LocalUnitaryTriple& t) {
    if (state.n_qubits() != 3)
        throw std::invalid_argument("apply_local_triple: expected 3-qubit state");
    State s = apply_local(state, t.u[0], 1);
    s = apply_local(s, t.u[1], 2);
    return apply_local(s, t.u[2], 3);
}

State random_lu_orbit(const State& state, std::uint64_t seed, bool y_rotations_only) {
    return apply_local_triple(state, random_local_triple(seed, y_rotations_only));
}

State random_state(int n_qubits, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<cd> a(std::uint64_t{1} << n_qubits);
    double n2 = 0.0;
    for (cd& x : a) {
        x = cd{rng.normal(), rng.normal()};
        n2 += std::norm(x);
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (cd& x : a) x *= scale;
    return State(n_qubits, std::move(a));
}

FamilyInvariants exact_family_invariants(FamilyId f, double theta) {
    const double st2 = std::sin(theta) * std::sin(theta);
    const double sh2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    FamilyInvariants inv;
    switch (f) {
        case FamilyId::OneCut:
            inv.c2 = {0.0, st2, st2};
            inv.omega2 = 0.0;
            inv.tau2 = 0.0;
            break;
        case FamilyId::W:
            // The split of qubit 1 carries sin^2(theta); the other two carry
            // sin^2(theta)/2 + sin^4(theta/2).  (Both the gamma contraction
            // and the reduced-density-matrix route give this assignment for
            // the state as written.)
            inv.c2 = {st2, st2 / 2.0 + sh2 * sh2, st2 / 2.0 + sh2 * sh2};
            inv.omega2 = sh2 * st2;
            inv.tau2 = 0.0;
            break;
        case FamilyId::GHZ:
            inv.c2 = {st2, st2, st2};
            inv.omega2 = st2;
            inv.tau2 = st2 * st2;
            break;
    }
    return inv;
}

}  // namespace luinv
