#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "luinv/rng.hpp"
#include "luinv/simulator.hpp"
#include "luinv/states.hpp"
#include "luinv/synthesis.hpp"

using namespace luinv;
using test_helpers::close;

TEST_CASE("run basics") {
    CHECK(close(run(Circuit(3)).amplitude(0), cd{1}));

    Circuit h(1);
    h.add(Gate::h(1));
    const State plus = run(h);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(close(plus.amplitude(0), cd{s}));
    CHECK(close(plus.amplitude(1), cd{s}));

    Circuit with_oracle(2);
    with_oracle.add(Gate::oracle("U", OracleVariant::U, {1, 2},
                                 std::make_shared<const Circuit>(Circuit(2))));
    CHECK_THROWS_AS(run(with_oracle), std::invalid_argument);
}

TEST_CASE("norm preservation over a long wide circuit") {
    Rng rng(2024);
    Circuit c(18);
    for (int g = 0; g < 300; ++g) {
        const int w = 1 + static_cast<int>(rng.next_u64() % 18);
        switch (rng.next_u64() % 6) {
            case 0: c.add(Gate::h(w)); break;
            case 1: c.add(Gate::x(w)); break;
            case 2: c.add(Gate::y(w)); break;
            case 3: c.add(Gate::ry(w, rng.uniform(0.0, 2.0 * M_PI))); break;
            case 4: {
                int t = 1 + static_cast<int>(rng.next_u64() % 18);
                if (t == w) t = (t % 18) + 1;
                c.add(Gate::cnot(w, t));
                break;
            }
            default: {
                int t = 1 + static_cast<int>(rng.next_u64() % 18);
                if (t == w) t = (t % 18) + 1;
                c.add(Gate::swap(w, t));
                break;
            }
        }
    }
    CHECK(close(run(c).norm2(), 1.0, 1e-10));
}

TEST_CASE("outcome probabilities sum to one") {
    Rng rng(77);
    Circuit c(6);
    for (int g = 0; g < 40; ++g) {
        const int w = 1 + static_cast<int>(rng.next_u64() % 6);
        if (rng.next_u64() % 2) {
            c.add(Gate::ry(w, rng.uniform(0.0, 2.0 * M_PI)));
        } else {
            int t = 1 + static_cast<int>(rng.next_u64() % 6);
            if (t == w) t = (t % 6) + 1;
            c.add(Gate::cnot(w, t));
        }
    }
    double total = 0.0;
    for (std::uint64_t i = 0; i < 64; ++i) total += outcome_probability(c, index_to_bitstring(i, 6));
    CHECK(close(total, 1.0, 1e-10));

    CHECK_THROWS_AS(outcome_probability(c, "000"), std::invalid_argument);
}

TEST_CASE("sampling determinism and counts") {
    const Circuit idle(3);
    const ShotResult sr = sample(idle, 100, 5);
    REQUIRE(sr.counts.size() == 1);
    CHECK(sr.counts.at("000") == 100);
    CHECK(sr.shots == 100);

    Circuit h(2);
    h.add(Gate::h(1)).add(Gate::h(2));
    const ShotResult a = sample(h, 1000, 42);
    const ShotResult b = sample(h, 1000, 42);
    CHECK(a.counts == b.counts);
    long long total = 0;
    for (const auto& [bits, count] : a.counts) total += count;
    CHECK(total == 1000);

    CHECK_THROWS_AS(sample(idle, 0, 1), std::invalid_argument);
}

TEST_CASE("empirical frequency converges at the binomial rate") {
    const Circuit prep = family_circuit(FamilyId::GHZ, representative_theta(FamilyId::GHZ));
    const MeasuredCircuit mc = build_small(InvariantTarget::tau2(), prep);
    const Circuit inlined = inline_oracles(mc.circuit);
    const long long shots = 100000;
    const ShotResult sr = sample(inlined, shots, 31337);
    const double p_hat = static_cast<double>(sr.counts.at(mc.outcome)) / shots;
    const double sigma = std::sqrt(0.25 * 0.75 / shots);
    CHECK(std::abs(p_hat - 0.25) < 5.0 * sigma);
}

TEST_CASE("invariant estimation") {
    const Circuit ghz_prep = family_circuit(FamilyId::GHZ, representative_theta(FamilyId::GHZ));
    const MeasuredCircuit tau = build_small(InvariantTarget::tau2(), ghz_prep);

    const InvariantEstimate est = estimate_invariant(tau, 100000, 7);
    CHECK(est.quantity == "tau2");
    CHECK(est.value > 0.9);
    CHECK(est.value < 1.1);
    CHECK(est.std_error > 0.0);

    // exact mode equals the plug-in value
    const InvariantEstimate exact = exact_estimate(tau);
    CHECK(close(exact.value, 1.0, 1e-12));
    CHECK(exact.std_error == 0.0);
    CHECK(close(exact.raw_probability, 0.25, 1e-12));

    // a vanishing invariant stays at zero with the rule-of-three error bar
    const Circuit cut_prep =
        family_circuit(FamilyId::OneCut, representative_theta(FamilyId::OneCut));
    const MeasuredCircuit c41 = build_small(InvariantTarget::c4(1), cut_prep);
    const InvariantEstimate zero = estimate_invariant(c41, 2000, 9);
    CHECK(zero.value == 0.0);
    CHECK(zero.raw_probability == 0.0);
    CHECK(close(zero.std_error, extract_value(c41, 3.0 / 2000.0), 1e-15));

    MeasuredCircuit bad = tau;
    bad.outcome = "00";
    CHECK_THROWS_AS(estimate_invariant(bad, 10, 1), std::invalid_argument);
}

TEST_CASE("deterministic uniform stream") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    // first draws of mt19937_64(5489) are pinned by the standard
    Rng c(5489);
    CHECK(c.next_u64() == 14514284786278117030ull);
}
