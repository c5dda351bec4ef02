#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "luinv/invariants.hpp"
#include "luinv/rng.hpp"
#include "luinv/simulator.hpp"
#include "luinv/states.hpp"

using namespace luinv;
using test_helpers::close;
using test_helpers::phase_aligned_distance;

TEST_CASE("family states match the printed amplitudes") {
    const State ghz0 = family_state(FamilyId::GHZ, 0.0);
    CHECK(close(ghz0.amplitude(0), cd{1}));

    const double s = 1.0 / std::sqrt(2.0);
    const State ghz = family_state(FamilyId::GHZ, representative_theta(FamilyId::GHZ));
    CHECK(close(ghz.amplitude(bitstring_to_index("000")), cd{s}, 1e-15));
    CHECK(close(ghz.amplitude(bitstring_to_index("111")), cd{s}, 1e-15));

    const State w = family_state(FamilyId::W, representative_theta(FamilyId::W));
    const double t = 1.0 / std::sqrt(3.0);
    CHECK(close(w.amplitude(bitstring_to_index("001")), cd{t}, 1e-15));
    CHECK(close(w.amplitude(bitstring_to_index("010")), cd{t}, 1e-15));
    CHECK(close(w.amplitude(bitstring_to_index("100")), cd{t}, 1e-15));

    const State cut = family_state(FamilyId::OneCut, representative_theta(FamilyId::OneCut));
    CHECK(close(cut.amplitude(bitstring_to_index("011")), cd{s}, 1e-15));
}

TEST_CASE("family circuits prepare the family states") {
    const State ghz = run(family_circuit(FamilyId::GHZ, M_PI / 2.0));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(close(ghz.amplitude(0), cd{s}, 1e-14));
    CHECK(close(ghz.amplitude(7), cd{s}, 1e-14));

    const State cut0 = run(family_circuit(FamilyId::OneCut, 0.0));
    CHECK(close(cut0.amplitude(0), cd{1}));

    const State w = run(family_circuit(FamilyId::W, representative_theta(FamilyId::W)));
    const State w_ref = family_state(FamilyId::W, representative_theta(FamilyId::W));
    for (int i = 0; i < 8; ++i) CHECK(close(w.amplitude(i), w_ref.amplitude(i), 1e-12));

    // fidelity 1 up to global phase across the grid
    for (FamilyId f : {FamilyId::OneCut, FamilyId::W, FamilyId::GHZ})
        for (int k = 0; k < 24; ++k) {
            const double theta = k * 2.0 * M_PI / 24.0;
            const State a = run(family_circuit(f, theta));
            const State b = family_state(f, theta);
            CHECK(phase_aligned_distance(b.amplitudes(), a.amplitudes()) < 1e-12);
        }
}

TEST_CASE("canonical state construction") {
    CanonicalParams p;
    p.lambda = {1, 0, 0, 0, 0};
    CHECK(close(canonical_state(p).amplitude(0), cd{1}));

    p.lambda = {1.0 / std::sqrt(2.0), 0, 0, 0, 1.0 / std::sqrt(2.0)};
    const State ghz = canonical_state(p);
    CHECK(close(ghz.amplitude(0), cd{1.0 / std::sqrt(2.0)}));
    CHECK(close(ghz.amplitude(7), cd{1.0 / std::sqrt(2.0)}));

    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        CanonicalParams cp;
        double sum = 0.0;
        for (double& l : cp.lambda) {
            l = rng.uniform();
            sum += l * l;
        }
        cp.theta = rng.uniform(0.0, M_PI);
        CHECK(close(canonical_state(cp).norm2(), sum, 1e-12));
        // the phase sits on the |100> amplitude
        const State s = canonical_state(cp);
        CHECK(close(s.amplitude(4), std::polar(cp.lambda[1], cp.theta), 1e-12));
    }
}

TEST_CASE("random LU orbit sampling") {
    const State ghz = family_state(FamilyId::GHZ, representative_theta(FamilyId::GHZ));
    const State a = random_lu_orbit(ghz, 42);
    const State b = random_lu_orbit(ghz, 42);
    for (int i = 0; i < 8; ++i) CHECK(close(a.amplitude(i), b.amplitude(i)));

    const InvariantSet base = three_qubit_invariants(ghz);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const InvariantSet inv = three_qubit_invariants(random_lu_orbit(ghz, seed));
        CHECK(close(inv.tau2, base.tau2, 1e-9));
        CHECK(close(inv.omega2, base.omega2, 1e-9));
        for (int i = 0; i < 3; ++i) CHECK(close(inv.c2[i], base.c2[i], 1e-9));
    }

    LocalUnitaryTriple id;
    id.u = {LocalMatrix::identity(), LocalMatrix::identity(), LocalMatrix::identity()};
    const State same = apply_local_triple(ghz, id);
    for (int i = 0; i < 8; ++i) CHECK(close(same.amplitude(i), ghz.amplitude(i)));

    const LocalUnitaryTriple yonly = random_local_triple(5, true);
    for (int i = 0; i < 3; ++i) {
        CHECK(yonly.u[i].is_unitary());
        CHECK(close(yonly.u[i](0, 0).imag(), 0.0));  // plain rotation, real matrix
        CHECK(close(yonly.u[i](0, 0), yonly.u[i](1, 1)));
    }
}

TEST_CASE("closed-form family invariants") {
    const FamilyInvariants ghz = exact_family_invariants(FamilyId::GHZ, M_PI / 2.0);
    CHECK(close(ghz.tau2, 1.0));
    CHECK(close(ghz.omega2, 1.0));

    const FamilyInvariants cut = exact_family_invariants(FamilyId::OneCut, M_PI);
    for (double c : cut.c2) CHECK(close(c, 0.0, 1e-15));

    const FamilyInvariants w = exact_family_invariants(FamilyId::W, M_PI / 2.0);
    CHECK(close(w.omega2, 0.5, 1e-15));

    // the closed forms agree with the direct contraction along the families
    for (FamilyId f : {FamilyId::OneCut, FamilyId::W, FamilyId::GHZ})
        for (int k = 0; k < 64; ++k) {
            const double theta = k * 2.0 * M_PI / 64.0;
            const FamilyInvariants ex = exact_family_invariants(f, theta);
            const InvariantSet inv = three_qubit_invariants(family_state(f, theta));
            for (int a = 0; a < 3; ++a) CHECK(close(ex.c2[a], inv.c2[a], 1e-9));
            CHECK(close(ex.omega2, inv.omega2, 1e-9));
            CHECK(close(ex.tau2, inv.tau2, 1e-9));
        }
}

TEST_CASE("random states are normalized and seeded") {
    const State a = random_state(3, 9);
    const State b = random_state(3, 9);
    CHECK(close(a.norm2(), 1.0, 1e-12));
    for (int i = 0; i < 8; ++i) CHECK(close(a.amplitude(i), b.amplitude(i)));
    // genuinely complex amplitudes
    double imag_mass = 0.0;
    for (int i = 0; i < 8; ++i) imag_mass += std::abs(a.amplitude(i).imag());
    CHECK(imag_mass > 0.1);
}
