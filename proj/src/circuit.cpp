#include "luinv/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace luinv {

namespace {

// (transpose bit, conjugate bit); Adjoint = both.
struct VariantBits {
    bool transpose;
    bool conjugate;
};

VariantBits bits_of(OracleVariant v) {
    switch (v) {
        case OracleVariant::U: return {false, false};
        case OracleVariant::Adjoint: return {true, true};
        case OracleVariant::Transpose: return {true, false};
        case OracleVariant::Conjugate: return {false, true};
    }
    throw std::logic_error("bits_of: bad variant");
}

OracleVariant variant_of(VariantBits b) {
    if (b.transpose && b.conjugate) return OracleVariant::Adjoint;
    if (b.transpose) return OracleVariant::Transpose;
    if (b.conjugate) return OracleVariant::Conjugate;
    return OracleVariant::U;
}

OracleVariant compose(OracleVariant outer, OracleVariant inner) {
    const VariantBits a = bits_of(outer), b = bits_of(inner);
    return variant_of({a.transpose != b.transpose, a.conjugate != b.conjugate});
}

std::vector<cd> transform_matrix(const std::vector<cd>& m, std::size_t dim, VariantBits b) {
    std::vector<cd> r(m.size());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            cd v = b.transpose ? m[j * dim + i] : m[i * dim + j];
            r[i * dim + j] = b.conjugate ? std::conj(v) : v;
        }
    return r;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t w = 0; w < p.size(); ++w) inv[p[w] - 1] = static_cast<int>(w + 1);
    return inv;
}

std::string format_angle(double a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return buf;
}

// Cycle decomposition of a permutation into swaps realizing the same
// content movement (content of w ends on perm[w-1]).
std::vector<std::pair<int, int>> permutation_swaps(const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> swaps;
    const int n = static_cast<int>(perm.size());
    std::vector<bool> done(n + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (done[start] || perm[start - 1] == start) {
            done[start] = true;
            continue;
        }
        std::vector<int> cycle;
        int w = start;
        while (!done[w]) {
            done[w] = true;
            cycle.push_back(w);
            w = perm[w - 1];
        }
        // swap(a_{m-1}, a_m), ..., swap(a_1, a_2) moves content a_i -> a_{i+1}
        for (int i = static_cast<int>(cycle.size()) - 2; i >= 0; --i)
            swaps.emplace_back(cycle[i], cycle[i + 1]);
    }
    return swaps;
}

}  // namespace

std::string to_string(OracleVariant v) {
    switch (v) {
        case OracleVariant::U: return "U";
        case OracleVariant::Adjoint: return "adjoint";
        case OracleVariant::Transpose: return "transpose";
        case OracleVariant::Conjugate: return "conjugate";
    }
    return "?";
}

namespace {
Gate make_gate(GateKind kind, std::vector<int> wires) {
    Gate g;
    g.kind = kind;
    g.wires = std::move(wires);
    return g;
}
}  // namespace

Gate Gate::h(int w) { return make_gate(GateKind::H, {w}); }
Gate Gate::x(int w) { return make_gate(GateKind::X, {w}); }
Gate Gate::y(int w) { return make_gate(GateKind::Y, {w}); }

Gate Gate::ry(int w, double angle) {
    Gate g = make_gate(GateKind::Ry, {w});
    g.angle = angle;
    return g;
}

Gate Gate::cnot(int control, int target) { return make_gate(GateKind::Cnot, {control, target}); }
Gate Gate::swap(int a, int b) { return make_gate(GateKind::Swap, {a, b}); }

Gate Gate::permute(std::vector<int> perm) {
    Gate g = make_gate(GateKind::Permute, {});
    g.perm = std::move(perm);
    return g;
}

Gate Gate::oracle(std::string label, OracleVariant v, std::vector<int> wires,
                  std::shared_ptr<const Circuit> prep) {
    Gate g = make_gate(GateKind::Oracle, std::move(wires));
    g.label = std::move(label);
    g.variant = v;
    g.prep = std::move(prep);
    return g;
}

Gate Gate::oracle_dense(std::string label, OracleVariant v, std::vector<int> wires,
                        std::vector<cd> matrix) {
    Gate g = make_gate(GateKind::Oracle, std::move(wires));
    g.label = std::move(label);
    g.variant = v;
    g.matrix = std::make_shared<const std::vector<cd>>(std::move(matrix));
    return g;
}

Gate Gate::dense(std::vector<int> wires, std::vector<cd> matrix) {
    Gate g = make_gate(GateKind::Dense, std::move(wires));
    g.matrix = std::make_shared<const std::vector<cd>>(std::move(matrix));
    return g;
}

Circuit::Circuit(int n_wires) : n_(n_wires) {
    if (n_wires < 1 || n_wires > 18)
        throw std::invalid_argument("Circuit: wire count must be in 1..18");
}

Circuit& Circuit::add(Gate g) {
    std::vector<bool> seen(n_ + 1, false);
    for (int w : g.wires) {
        if (w < 1 || w > n_) throw std::invalid_argument("Circuit::add: wire out of range");
        if (seen[w]) throw std::invalid_argument("Circuit::add: duplicate wire");
        seen[w] = true;
    }
    switch (g.kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Ry:
            if (g.wires.size() != 1) throw std::invalid_argument("Circuit::add: expected 1 wire");
            break;
        case GateKind::Cnot:
        case GateKind::Swap:
            if (g.wires.size() != 2) throw std::invalid_argument("Circuit::add: expected 2 wires");
            break;
        case GateKind::Permute: {
            if (static_cast<int>(g.perm.size()) != n_)
                throw std::invalid_argument("Circuit::add: permutation size mismatch");
            std::vector<bool> hit(n_ + 1, false);
            for (int p : g.perm) {
                if (p < 1 || p > n_ || hit[p])
                    throw std::invalid_argument("Circuit::add: permutation is not a bijection");
                hit[p] = true;
            }
            break;
        }
        case GateKind::Oracle: {
            if (g.wires.empty()) throw std::invalid_argument("Circuit::add: oracle needs wires");
            if (static_cast<bool>(g.prep) == static_cast<bool>(g.matrix))
                throw std::invalid_argument(
                    "Circuit::add: oracle needs exactly one of prep circuit or dense matrix");
            const std::size_t dim = std::size_t{1} << g.wires.size();
            if (g.prep && g.prep->n_wires() != static_cast<int>(g.wires.size()))
                throw std::invalid_argument("Circuit::add: oracle prep width mismatch");
            if (g.matrix && g.matrix->size() != dim * dim)
                throw std::invalid_argument("Circuit::add: oracle matrix size mismatch");
            break;
        }
        case GateKind::Dense: {
            const std::size_t dim = std::size_t{1} << g.wires.size();
            if (!g.matrix || g.matrix->size() != dim * dim)
                throw std::invalid_argument("Circuit::add: dense matrix size mismatch");
            break;
        }
    }
    gates_.push_back(std::move(g));
    return *this;
}

Circuit oracle_variant(const Circuit& prep, OracleVariant v) {
    const VariantBits b = bits_of(v);
    Circuit out(prep.n_wires());
    auto transform = [&](const Gate& g) -> Gate {
        switch (g.kind) {
            case GateKind::H:
            case GateKind::X:
            case GateKind::Cnot:
            case GateKind::Swap:
                return g;
            case GateKind::Y:
                // Y^T = -Y and conj(Y) = -Y; the global phase is dropped.
                return g;
            case GateKind::Ry:
                return b.transpose ? Gate::ry(g.wires[0], -g.angle) : g;
            case GateKind::Permute:
                return b.transpose ? Gate::permute(inverse_perm(g.perm)) : g;
            case GateKind::Oracle: {
                Gate r = g;
                r.variant = compose(v, g.variant);
                if (r.matrix) {
                    const std::size_t dim = std::size_t{1} << g.wires.size();
                    r.matrix = std::make_shared<const std::vector<cd>>(
                        transform_matrix(*g.matrix, dim, b));
                }
                return r;
            }
            case GateKind::Dense: {
                Gate r = g;
                const std::size_t dim = std::size_t{1} << g.wires.size();
                r.matrix =
                    std::make_shared<const std::vector<cd>>(transform_matrix(*g.matrix, dim, b));
                return r;
            }
        }
        throw std::logic_error("oracle_variant: bad gate kind");
    };
    const auto& gates = prep.gates();
    if (b.transpose) {
        for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.add(transform(*it));
    } else {
        for (const Gate& g : gates) out.add(transform(g));
    }
    return out;
}

Circuit inline_oracles(const Circuit& c) {
    Circuit out(c.n_wires());
    for (const Gate& g : c.gates()) {
        if (g.kind != GateKind::Oracle) {
            out.add(g);
            continue;
        }
        if (g.matrix) {
            // Variant already baked into the stored matrix at creation and
            // composed by oracle_variant; emit as-is.
            out.add(Gate::dense(g.wires, *g.matrix));
            continue;
        }
        const Circuit sub = inline_oracles(oracle_variant(*g.prep, g.variant));
        for (const Gate& s : sub.gates()) {
            Gate r = s;
            if (s.kind == GateKind::Permute) {
                std::vector<int> full(c.n_wires());
                for (int w = 1; w <= c.n_wires(); ++w) full[w - 1] = w;
                for (std::size_t w = 0; w < s.perm.size(); ++w)
                    full[g.wires[w] - 1] = g.wires[s.perm[w] - 1];
                r = Gate::permute(std::move(full));
            } else {
                for (int& w : r.wires) w = g.wires[w - 1];
            }
            out.add(std::move(r));
        }
    }
    return out;
}

Circuit dense_preparation(const State& psi, const std::string& label) {
    const double n2 = psi.norm2();
    if (std::abs(n2 - 1.0) > 1e-9)
        throw std::invalid_argument("dense_preparation: state must be normalized");
    const int n = psi.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    const cd a0 = psi.amplitude(0);
    const cd phase = std::abs(a0) > 1e-14 ? a0 / std::abs(a0) : cd{1.0};

    std::vector<cd> v(dim);
    double v2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = (i == 0 ? cd{1.0} : cd{0.0}) - std::conj(phase) * psi.amplitude(i);
        v2 += std::norm(v[i]);
    }
    std::vector<cd> m(dim * dim, cd{0});
    if (v2 < 1e-24) {
        for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = phase;
    } else {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                const cd h = (i == j ? cd{1.0} : cd{0.0}) - 2.0 * v[i] * std::conj(v[j]) / v2;
                m[i * dim + j] = phase * h;
            }
    }
    std::vector<int> wires(n);
    for (int w = 1; w <= n; ++w) wires[w - 1] = w;
    Circuit c(n);
    c.add(Gate::oracle_dense(label, OracleVariant::U, std::move(wires), std::move(m)));
    return c;
}

std::string to_openqasm(const Circuit& c) {
    std::string out;
    out += "OPENQASM 3.0;\n";
    out += "qubit[" + std::to_string(c.n_wires()) + "] q;\n";
    out += "bit[" + std::to_string(c.n_wires()) + "] c;\n";
    auto q = [](int w) { return "q[" + std::to_string(w - 1) + "]"; };
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::H: out += "h " + q(g.wires[0]) + ";\n"; break;
            case GateKind::X: out += "x " + q(g.wires[0]) + ";\n"; break;
            case GateKind::Y: out += "y " + q(g.wires[0]) + ";\n"; break;
            case GateKind::Ry:
                out += "ry(" + format_angle(g.angle) + ") " + q(g.wires[0]) + ";\n";
                break;
            case GateKind::Cnot:
                out += "cx " + q(g.wires[0]) + ", " + q(g.wires[1]) + ";\n";
                break;
            case GateKind::Swap:
                out += "swap " + q(g.wires[0]) + ", " + q(g.wires[1]) + ";\n";
                break;
            case GateKind::Permute:
                for (const auto& [a, b] : permutation_swaps(g.perm))
                    out += "swap " + q(a) + ", " + q(b) + ";\n";
                break;
            case GateKind::Oracle:
                throw std::invalid_argument("to_openqasm: un-inlined oracle block present");
            case GateKind::Dense:
                throw std::invalid_argument("to_openqasm: dense gate has no QASM form");
        }
    }
    out += "c = measure q;\n";
    return out;
}

namespace {

nlohmann::ordered_json gate_to_json(const Gate& g) {
    nlohmann::ordered_json j;
    switch (g.kind) {
        case GateKind::H: j["kind"] = "h"; break;
        case GateKind::X: j["kind"] = "x"; break;
        case GateKind::Y: j["kind"] = "y"; break;
        case GateKind::Ry: j["kind"] = "ry"; break;
        case GateKind::Cnot: j["kind"] = "cnot"; break;
        case GateKind::Swap: j["kind"] = "swap"; break;
        case GateKind::Permute: j["kind"] = "permute"; break;
        case GateKind::Oracle: j["kind"] = "oracle"; break;
        case GateKind::Dense: j["kind"] = "dense"; break;
    }
    if (!g.wires.empty()) j["wires"] = g.wires;
    if (g.kind == GateKind::Ry) j["angle"] = g.angle;
    if (g.kind == GateKind::Permute) j["perm"] = g.perm;
    if (g.kind == GateKind::Oracle) {
        j["label"] = g.label;
        j["variant"] = to_string(g.variant);
        j["dense"] = static_cast<bool>(g.matrix);
    }
    return j;
}

}  // namespace

std::string circuit_to_json(const Circuit& c) {
    nlohmann::ordered_json j;
    j["n_wires"] = c.n_wires();
    j["gates"] = nlohmann::ordered_json::array();
    for (const Gate& g : c.gates()) j["gates"].push_back(gate_to_json(g));
    return j.dump();
}

std::string measured_circuit_to_json(const MeasuredCircuit& mc) {
    nlohmann::ordered_json j;
    j["quantity"] = mc.quantity;
    j["outcome"] = mc.outcome;
    j["scale_log2"] = mc.scale_log2;
    j["root"] = mc.root;
    j["circuit"] = nlohmann::ordered_json::parse(circuit_to_json(mc.circuit));
    return j.dump();
}

double extract_value(const MeasuredCircuit& mc, double probability) {
    const double scaled = std::ldexp(probability, mc.scale_log2);
    return mc.root == 1 ? scaled : std::pow(scaled, 1.0 / mc.root);
}

}  // namespace luinv
