// Exact statevector execution of circuits up to 18 wires, outcome
// probabilities and seeded shot sampling.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "luinv/circuit.hpp"
#include "luinv/state.hpp"

namespace luinv {

struct ShotResult {
    std::map<std::string, long long> counts;
    long long shots = 0;
    std::uint64_t seed = 0;
};

struct InvariantEstimate {
    double value = 0.0;
    double std_error = 0.0;
    double raw_probability = 0.0;
    std::string quantity;
};

/// Final state of the circuit from |0...0>.  Oracle gates must have been
/// inlined; permutations are applied as index remaps.
State run(const Circuit& c);

/// |<outcome|run(c)>|^2 for a computational-basis outcome bitstring read
/// in wire order.
double outcome_probability(const Circuit& c, const std::string& outcome);

/// Draws shots i.i.d. outcomes from the final distribution; reproducible
/// per seed.
ShotResult sample(const Circuit& c, long long shots, std::uint64_t seed);

/// Shot-based estimate under the MeasuredCircuit contract; the standard
/// error propagates the binomial variance p(1-p)/shots through the scale
/// map, and a zero count reports value 0 with the rule-of-three upper
/// bound (p = 3/shots) pushed through the same map as the error.  Oracle
/// blocks are inlined internally.
InvariantEstimate estimate_invariant(const MeasuredCircuit& mc, long long shots,
                                     std::uint64_t seed);

/// Infinite-shot limit: the value implied by the exact outcome probability.
InvariantEstimate exact_estimate(const MeasuredCircuit& mc);

}  // namespace luinv
