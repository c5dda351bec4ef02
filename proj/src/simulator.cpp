#include "luinv/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "luinv/rng.hpp"

namespace luinv {

namespace {

using Amps = std::vector<cd>;

void apply_single(Amps& a, int n, int wire, const cd m00, const cd m01, const cd m10,
                  const cd m11) {
    const std::uint64_t mask = std::uint64_t{1} << (n - wire);
    const std::uint64_t size = a.size();
    for (std::uint64_t i = 0; i < size; ++i) {
        if (i & mask) continue;
        const cd a0 = a[i], a1 = a[i | mask];
        a[i] = m00 * a0 + m01 * a1;
        a[i | mask] = m10 * a0 + m11 * a1;
    }
}

void apply_cnot(Amps& a, int n, int control, int target) {
    const std::uint64_t cm = std::uint64_t{1} << (n - control);
    const std::uint64_t tm = std::uint64_t{1} << (n - target);
    for (std::uint64_t i = 0; i < a.size(); ++i)
        if ((i & cm) && !(i & tm)) std::swap(a[i], a[i | tm]);
}

void apply_swap(Amps& a, int n, int w1, int w2) {
    const std::uint64_t m1 = std::uint64_t{1} << (n - w1);
    const std::uint64_t m2 = std::uint64_t{1} << (n - w2);
    for (std::uint64_t i = 0; i < a.size(); ++i)
        if ((i & m1) && !(i & m2)) std::swap(a[i ^ m1 ^ m2], a[i]);
}

void apply_permute(Amps& a, int n, const std::vector<int>& perm) {
    Amps out(a.size());
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        std::uint64_t j = 0;
        for (int w = 1; w <= n; ++w) j |= ((i >> (n - w)) & 1u) << (n - perm[w - 1]);
        out[j] = a[i];
    }
    a = std::move(out);
}

void apply_dense(Amps& a, int n, const std::vector<int>& wires, const std::vector<cd>& m) {
    const int k = static_cast<int>(wires.size());
    const std::uint64_t d = std::uint64_t{1} << k;
    std::vector<std::uint64_t> bit(k);
    std::uint64_t block_mask = 0;
    for (int b = 0; b < k; ++b) {
        bit[b] = std::uint64_t{1} << (n - wires[b]);
        block_mask |= bit[b];
    }
    std::vector<cd> in(d), out(d);
    for (std::uint64_t base = 0; base < a.size(); ++base) {
        if (base & block_mask) continue;
        for (std::uint64_t r = 0; r < d; ++r) {
            std::uint64_t idx = base;
            for (int b = 0; b < k; ++b)
                if ((r >> (k - 1 - b)) & 1u) idx |= bit[b];
            in[r] = a[idx];
        }
        for (std::uint64_t r = 0; r < d; ++r) {
            cd acc{0};
            const cd* row = m.data() + r * d;
            for (std::uint64_t c = 0; c < d; ++c) acc += row[c] * in[c];
            out[r] = acc;
        }
        for (std::uint64_t r = 0; r < d; ++r) {
            std::uint64_t idx = base;
            for (int b = 0; b < k; ++b)
                if ((r >> (k - 1 - b)) & 1u) idx |= bit[b];
            a[idx] = out[r];
        }
    }
}

}  // namespace

State run(const Circuit& c) {
    const int n = c.n_wires();
    Amps a(std::uint64_t{1} << n, cd{0});
    a[0] = cd{1};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::H:
                apply_single(a, n, g.wires[0], cd{inv_sqrt2}, cd{inv_sqrt2}, cd{inv_sqrt2},
                             cd{-inv_sqrt2});
                break;
            case GateKind::X:
                apply_single(a, n, g.wires[0], cd{0}, cd{1}, cd{1}, cd{0});
                break;
            case GateKind::Y:
                apply_single(a, n, g.wires[0], cd{0}, cd{0, -1}, cd{0, 1}, cd{0});
                break;
            case GateKind::Ry: {
                const double ch = std::cos(g.angle / 2.0), sh = std::sin(g.angle / 2.0);
                apply_single(a, n, g.wires[0], cd{ch}, cd{-sh}, cd{sh}, cd{ch});
                break;
            }
            case GateKind::Cnot: apply_cnot(a, n, g.wires[0], g.wires[1]); break;
            case GateKind::Swap: apply_swap(a, n, g.wires[0], g.wires[1]); break;
            case GateKind::Permute: apply_permute(a, n, g.perm); break;
            case GateKind::Dense: apply_dense(a, n, g.wires, *g.matrix); break;
            case GateKind::Oracle:
                throw std::invalid_argument("run: un-inlined oracle block present");
        }
    }
    return State(n, std::move(a));
}

double outcome_probability(const Circuit& c, const std::string& outcome) {
    if (static_cast<int>(outcome.size()) != c.n_wires())
        throw std::invalid_argument("outcome_probability: bitstring length mismatch");
    const State s = run(c);
    return std::norm(s.amplitude(bitstring_to_index(outcome)));
}

ShotResult sample(const Circuit& c, long long shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
    const State s = run(c);
    const std::uint64_t dim = s.dim();
    std::vector<double> cdf(dim);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) {
        acc += std::norm(s.amplitude(i));
        cdf[i] = acc;
    }
    const double total = acc;  // < 1 only through rounding; draws rescale by it
    Rng rng(seed);
    std::unordered_map<std::uint64_t, long long> hist;
    for (long long t = 0; t < shots; ++t) {
        const double u = rng.uniform() * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::uint64_t idx =
            it == cdf.end() ? dim - 1 : static_cast<std::uint64_t>(it - cdf.begin());
        ++hist[idx];
    }
    ShotResult result;
    result.shots = shots;
    result.seed = seed;
    for (const auto& [idx, count] : hist)
        result.counts[index_to_bitstring(idx, c.n_wires())] = count;
    return result;
}

namespace {

InvariantEstimate estimate_from_probability(const MeasuredCircuit& mc, double p,
                                            double p_variance) {
    InvariantEstimate est;
    est.quantity = mc.quantity;
    est.raw_probability = p;
    est.value = extract_value(mc, p);
    if (p_variance > 0.0 && p > 0.0) {
        // d value / d p = 2^(k/r) p^(1/r - 1) / r
        const double dvdp =
            std::exp2(static_cast<double>(mc.scale_log2) / mc.root) *
            std::pow(p, 1.0 / mc.root - 1.0) / mc.root;
        est.std_error = dvdp * std::sqrt(p_variance);
    }
    return est;
}

}  // namespace

InvariantEstimate estimate_invariant(const MeasuredCircuit& mc, long long shots,
                                     std::uint64_t seed) {
    if (static_cast<int>(mc.outcome.size()) != mc.circuit.n_wires())
        throw std::invalid_argument("estimate_invariant: outcome string length mismatch");
    const Circuit inlined = inline_oracles(mc.circuit);
    const ShotResult sr = sample(inlined, shots, seed);
    const auto it = sr.counts.find(mc.outcome);
    const long long hits = it == sr.counts.end() ? 0 : it->second;
    const double p = static_cast<double>(hits) / static_cast<double>(shots);
    if (hits == 0) {
        InvariantEstimate est;
        est.quantity = mc.quantity;
        est.raw_probability = 0.0;
        est.value = 0.0;
        est.std_error = extract_value(mc, 3.0 / static_cast<double>(shots));
        return est;
    }
    return estimate_from_probability(mc, p, p * (1.0 - p) / static_cast<double>(shots));
}

InvariantEstimate exact_estimate(const MeasuredCircuit& mc) {
    if (static_cast<int>(mc.outcome.size()) != mc.circuit.n_wires())
        throw std::invalid_argument("exact_estimate: outcome string length mismatch");
    const Circuit inlined = inline_oracles(mc.circuit);
    return estimate_from_probability(mc, outcome_probability(inlined, mc.outcome), 0.0);
}

std::vector<cd> circuit_matrix(const Circuit& c) {
    const Circuit inlined = inline_oracles(c);
    const std::uint64_t dim = std::uint64_t{1} << c.n_wires();
    std::vector<cd> m(dim * dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        // X gates prepare |col> in front of the circuit, then run from |0..0>.
        Circuit with_prep(c.n_wires());
        for (int w = 1; w <= c.n_wires(); ++w)
            if ((col >> (c.n_wires() - w)) & 1u) with_prep.add(Gate::x(w));
        for (const Gate& g : inlined.gates()) with_prep.add(g);
        const State res = run(with_prep);
        for (std::uint64_t row = 0; row < dim; ++row) m[row * dim + col] = res.amplitude(row);
    }
    return m;
}

}  // namespace luinv
