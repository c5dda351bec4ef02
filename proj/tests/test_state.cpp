#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "luinv/rng.hpp"
#include "luinv/state.hpp"
#include "luinv/states.hpp"

using namespace luinv;
using test_helpers::close;

TEST_CASE("pauli action on basis states") {
    const State zero(1);
    const State y0 = apply_local(zero, LocalMatrix::pauli_y(), 1);
    CHECK(close(y0.amplitude(0), cd{0}));
    CHECK(close(y0.amplitude(1), cd{0, 1}));  // Y|0> = i|1>

    const State same = apply_local(zero, LocalMatrix::identity(), 1);
    CHECK(close(same.amplitude(0), cd{1}));
}

TEST_CASE("Y x Y on the Bell pair flips the sign") {
    const double s = 1.0 / std::sqrt(2.0);
    const State bell(2, {cd{s}, cd{0}, cd{0}, cd{s}});
    State got = apply_local(bell, LocalMatrix::pauli_y(), 1);
    got = apply_local(got, LocalMatrix::pauli_y(), 2);

    // Dense 4x4 oracle for the same product.
    const auto yy = test_helpers::kron(test_helpers::local_to_vec(LocalMatrix::pauli_y()), 2,
                                       test_helpers::local_to_vec(LocalMatrix::pauli_y()), 2);
    const auto want = test_helpers::matvec(yy, bell.amplitudes());
    for (int i = 0; i < 4; ++i) CHECK(close(got.amplitude(i), want[i]));
    CHECK(close(got.amplitude(0), cd{-s}));
    CHECK(close(got.amplitude(3), cd{-s}));
}

TEST_CASE("index convention puts wire 1 on the most significant bit") {
    // |011> must live at index 3.
    const State s = State::basis(3, bitstring_to_index("011"));
    CHECK(close(s.amplitude(3), cd{1}));
    CHECK(index_to_bitstring(3, 3) == "011");
}

TEST_CASE("wire permutations") {
    const State s01 = State::basis(2, bitstring_to_index("01"));
    const State swapped = permute_wires(s01, {2, 1});
    CHECK(close(swapped.amplitude(bitstring_to_index("10")), cd{1}));

    const State id = permute_wires(s01, {1, 2});
    CHECK(close(id.amplitude(bitstring_to_index("01")), cd{1}));

    // sigma' on a random 18-qubit basis state, then its inverse.
    std::vector<int> sigma(18);
    for (int w = 1; w <= 18; ++w) sigma[w - 1] = w;
    auto cyc = [&](std::initializer_list<int> cycle) {
        auto it = cycle.begin();
        int prev = *it++;
        const int first = prev;
        for (; it != cycle.end(); ++it) {
            sigma[prev - 1] = *it;
            prev = *it;
        }
        sigma[prev - 1] = first;
    };
    cyc({2, 3, 5, 4, 7});
    cyc({8, 9, 11, 10, 13});
    cyc({14, 15, 17, 16});
    std::vector<int> inverse(18);
    for (int w = 1; w <= 18; ++w) inverse[sigma[w - 1] - 1] = w;

    Rng rng(99);
    const std::uint64_t idx = rng.next_u64() % (std::uint64_t{1} << 18);
    const State basis = State::basis(18, idx);
    const State round = permute_wires(permute_wires(basis, sigma), inverse);
    CHECK(close(round.amplitude(idx), cd{1}));
    CHECK(close(round.norm2(), 1.0));

    // Direct index bookkeeping: content of wire w lands on wire sigma(w).
    const State moved = permute_wires(basis, sigma);
    std::uint64_t expect = 0;
    for (int w = 1; w <= 18; ++w) {
        const std::uint64_t bit = (idx >> (18 - w)) & 1u;
        expect |= bit << (18 - sigma[w - 1]);
    }
    CHECK(close(moved.amplitude(expect), cd{1}));
}

TEST_CASE("inner products") {
    const State zero(1);
    const State one = State::basis(1, 1);
    CHECK(close(inner(zero, zero), cd{1}));
    CHECK(close(inner(zero, one), cd{0}));

    const State ghz = family_state(FamilyId::GHZ, representative_theta(FamilyId::GHZ));
    CHECK(close(inner(ghz, ghz), cd{1}, 1e-14));

    // conjugate-linear in the first slot
    const State a = random_state(2, 5);
    const State b = random_state(2, 6);
    CHECK(close(inner(a, b), std::conj(inner(b, a))));
}

TEST_CASE("unitary application preserves the norm") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const State psi = random_state(3, seed);
        const LocalUnitaryTriple t = random_local_triple(seed + 1000);
        for (int w = 0; w < 3; ++w) REQUIRE(t.u[w].is_unitary());
        const State rotated = apply_local_triple(psi, t);
        CHECK(close(rotated.norm2(), psi.norm2(), 1e-12));
    }
}

TEST_CASE("permutation preserves the amplitude modulus multiset") {
    const State psi = random_state(3, 17);
    const State moved = permute_wires(psi, {3, 1, 2});
    std::vector<double> a, b;
    for (int i = 0; i < 8; ++i) {
        a.push_back(std::abs(psi.amplitude(i)));
        b.push_back(std::abs(moved.amplitude(i)));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int i = 0; i < 8; ++i) CHECK(close(a[i], b[i]));
    CHECK(close(moved.norm2(), psi.norm2()));
}

TEST_CASE("Cauchy-Schwarz on random states") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const State a = random_state(3, 2 * seed);
        const State b = random_state(3, 2 * seed + 1);
        CHECK(std::norm(inner(a, b)) <= a.norm2() * b.norm2() + 1e-12);
    }
}

TEST_CASE("epsilon pair expands into delta products") {
    const LocalMatrix e = LocalMatrix::epsilon();
    const LocalMatrix d = LocalMatrix::identity();
    for (int i = 0; i < 2; ++i)
        for (int ip = 0; ip < 2; ++ip)
            for (int k = 0; k < 2; ++k)
                for (int kp = 0; kp < 2; ++kp) {
                    const cd lhs = e(i, ip) * e(k, kp);
                    const cd rhs = d(i, k) * d(ip, kp) - d(i, kp) * d(ip, k);
                    CHECK(close(lhs, rhs));
                }
    // epsilon = iY exactly as stored
    const LocalMatrix y = LocalMatrix::pauli_y();
    for (int i = 0; i < 4; ++i) CHECK(close(e.m[i], cd{0, 1} * y.m[i]));
}

TEST_CASE("error paths") {
    const State s(2);
    CHECK_THROWS_AS(apply_local(s, LocalMatrix::pauli_x(), 0), std::invalid_argument);
    CHECK_THROWS_AS(apply_local(s, LocalMatrix::pauli_x(), 3), std::invalid_argument);
    CHECK_THROWS_AS(permute_wires(s, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(permute_wires(s, {1}), std::invalid_argument);
    CHECK_THROWS_AS(inner(s, State(3)), std::invalid_argument);
    CHECK_THROWS_AS(State(2, std::vector<cd>(3)), std::invalid_argument);
}
