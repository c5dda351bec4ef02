#include "luinv/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "luinv/invariants.hpp"

namespace luinv {

namespace {

std::vector<int> block_wires(int offset, int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = offset + i + 1;
    return w;
}

void add_block(Circuit& c, const std::shared_ptr<const Circuit>& prep, OracleVariant v,
               int offset) {
    c.add(Gate::oracle("U_psi", v, block_wires(offset, prep->n_wires()), prep));
}

void check_prep_width(const InvariantTarget& t, const Circuit& prep) {
    if (prep.n_wires() != target_state_qubits(t))
        throw std::invalid_argument("synthesis: prep width does not match target");
}

void check_axis(int axis) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("synthesis: axis must be in 1..3");
}

int check_subsystem(const InvariantTarget& t) {
    if (t.subsystem < 1 || t.subsystem > 3)
        throw std::invalid_argument("synthesis: subsystem must be in 1..3");
    return t.subsystem;
}

std::string quantity_label(const InvariantTarget& t) {
    switch (t.kind) {
        case TargetKind::Norm4_2q:
        case TargetKind::Norm4_3q: return "n4";
        case TargetKind::Conc2_2q: return "c2";
        case TargetKind::Tau2: return "tau2";
        case TargetKind::G4: return "g2_" + std::to_string(t.subsystem);
        case TargetKind::C4: return "c2_" + std::to_string(t.subsystem);
        case TargetKind::Omega4: return "omega2";
    }
    throw std::logic_error("quantity_label: bad target");
}

// One Bell contraction between two wires of the doubled circuit; outcome
// bit 1 selects the epsilon projector, bit 0 the delta projector.
struct BellPair {
    int first;
    int second;
    bool epsilon;
};

// Conjugation pattern of the prep copies and the contraction pairs of the
// Bell circuit for a 3-qubit quartic target.  Copies sit on wire triples
// in order; pair slots are laid out so that the permutation form matches
// the printed permutations (sigma and sigma') gate for gate.
struct BellLayout {
    std::vector<OracleVariant> copies;
    std::vector<BellPair> pairs;  // in slot order
};

BellLayout bell_layout(const InvariantTarget& t) {
    using OV = OracleVariant;
    switch (t.kind) {
        case TargetKind::Norm4_2q:
            return {{OV::U, OV::Conjugate}, {{1, 3, false}, {2, 4, false}}};
        case TargetKind::Conc2_2q:
            return {{OV::U, OV::U}, {{1, 3, true}, {2, 4, true}}};
        case TargetKind::Norm4_3q:
            return {{OV::U, OV::Conjugate}, {{1, 4, false}, {2, 5, false}, {3, 6, false}}};
        case TargetKind::Tau2: {
            BellLayout l{{OV::U, OV::U, OV::U, OV::U}, {}};
            for (int p = 2; p <= 3; ++p) l.pairs.push_back({p, p + 3, true});
            l.pairs.push_back({1, 7, true});
            l.pairs.push_back({4, 10, true});
            for (int p = 2; p <= 3; ++p) l.pairs.push_back({p + 6, p + 9, true});
            return l;
        }
        case TargetKind::G4:
        case TargetKind::C4: {
            const int a = t.subsystem;
            const bool cross_eps = t.kind == TargetKind::C4;
            BellLayout l;
            l.copies = t.kind == TargetKind::G4
                           ? std::vector<OV>{OV::U, OV::U, OV::Conjugate, OV::Conjugate}
                           : std::vector<OV>{OV::U, OV::Conjugate, OV::U, OV::Conjugate};
            for (int p = 1; p <= 3; ++p)
                if (p != a) l.pairs.push_back({p, p + 3, !cross_eps});
            l.pairs.push_back({a, a + 6, cross_eps});
            l.pairs.push_back({a + 3, a + 9, cross_eps});
            for (int p = 1; p <= 3; ++p)
                if (p != a) l.pairs.push_back({p + 6, p + 9, !cross_eps});
            return l;
        }
        case TargetKind::Omega4: {
            BellLayout l{{OV::U, OV::U, OV::U, OV::Conjugate, OV::Conjugate, OV::Conjugate}, {}};
            l.pairs.push_back({1, 7, true});
            l.pairs.push_back({2, 5, true});
            l.pairs.push_back({3, 6, true});
            l.pairs.push_back({4, 13, false});
            l.pairs.push_back({8, 11, false});
            l.pairs.push_back({9, 12, false});
            l.pairs.push_back({10, 16, true});
            l.pairs.push_back({14, 17, true});
            l.pairs.push_back({15, 18, true});
            return l;
        }
    }
    throw std::logic_error("bell_layout: bad target");
}

struct ScaleInfo {
    int k_small;
    int root;
};

ScaleInfo scale_info(const InvariantTarget& t) {
    switch (t.kind) {
        case TargetKind::Norm4_2q:
        case TargetKind::Norm4_3q: return {0, 1};
        case TargetKind::Conc2_2q: return {0, 1};
        case TargetKind::Tau2: return {2, 1};
        case TargetKind::G4: return {0, 2};
        case TargetKind::C4: return {2, 2};
        case TargetKind::Omega4: return {4, 2};
    }
    throw std::logic_error("scale_info: bad target");
}

}  // namespace

std::string to_string(const InvariantTarget& t) {
    switch (t.kind) {
        case TargetKind::Norm4_2q: return "norm4_2q";
        case TargetKind::Conc2_2q: return "conc2_2q";
        case TargetKind::Norm4_3q: return "norm4_3q";
        case TargetKind::Tau2: return "tau2";
        case TargetKind::G4: return "g4_" + std::to_string(t.subsystem);
        case TargetKind::C4: return "c4_" + std::to_string(t.subsystem);
        case TargetKind::Omega4: return "omega4";
    }
    return "?";
}

InvariantTarget target_from_string(const std::string& name) {
    if (name == "norm4_2q") return InvariantTarget::norm4_2q();
    if (name == "conc2_2q") return InvariantTarget::conc2_2q();
    if (name == "norm4_3q") return InvariantTarget::norm4_3q();
    if (name == "tau2") return InvariantTarget::tau2();
    if (name == "omega4") return InvariantTarget::omega4();
    if (name.size() == 4 && (name.rfind("g4_", 0) == 0 || name.rfind("c4_", 0) == 0)) {
        const int a = name[3] - '0';
        if (a >= 1 && a <= 3)
            return name[0] == 'g' ? InvariantTarget::g4(a) : InvariantTarget::c4(a);
    }
    throw std::invalid_argument("unknown target '" + name + "'");
}

int target_state_qubits(const InvariantTarget& t) {
    return (t.kind == TargetKind::Norm4_2q || t.kind == TargetKind::Conc2_2q) ? 2 : 3;
}

MeasuredCircuit build_small(const InvariantTarget& t, const Circuit& prep, int axis) {
    check_prep_width(t, prep);
    check_axis(axis);
    const auto sp = std::make_shared<const Circuit>(prep);
    const ScaleInfo sc = scale_info(t);
    using OV = OracleVariant;

    switch (t.kind) {
        case TargetKind::Norm4_2q:
        case TargetKind::Norm4_3q: {
            const int n = prep.n_wires();
            Circuit c(n);
            add_block(c, sp, OV::U, 0);
            add_block(c, sp, OV::Adjoint, 0);
            return {std::move(c), std::string(n, '0'), sc.k_small, sc.root, quantity_label(t)};
        }
        case TargetKind::Conc2_2q: {
            Circuit c(2);
            add_block(c, sp, OV::U, 0);
            c.add(Gate::y(1)).add(Gate::y(2));
            add_block(c, sp, OV::Transpose, 0);
            return {std::move(c), "00", sc.k_small, sc.root, quantity_label(t)};
        }
        case TargetKind::Tau2: {
            Circuit c(6);
            add_block(c, sp, OV::U, 0);
            add_block(c, sp, OV::U, 3);
            for (int w = 1; w <= 6; ++w) c.add(Gate::y(w));
            c.add(Gate::swap(axis, axis + 3));
            add_block(c, sp, OV::Transpose, 0);
            add_block(c, sp, OV::Transpose, 3);
            return {std::move(c), "000000", sc.k_small, sc.root, quantity_label(t)};
        }
        case TargetKind::G4: {
            const int a = check_subsystem(t);
            Circuit c(6);
            add_block(c, sp, OV::U, 0);
            add_block(c, sp, OV::Conjugate, 3);
            for (int p = 1; p <= 3; ++p) {
                if (p == a) continue;
                c.add(Gate::y(p)).add(Gate::y(p + 3));
            }
            c.add(Gate::swap(a, a + 3));
            add_block(c, sp, OV::Transpose, 0);
            add_block(c, sp, OV::Adjoint, 3);
            return {std::move(c), "000000", sc.k_small, sc.root, quantity_label(t)};
        }
        case TargetKind::C4: {
            const int a = check_subsystem(t);
            Circuit c(6);
            add_block(c, sp, OV::U, 0);
            add_block(c, sp, OV::Conjugate, 3);
            c.add(Gate::y(a)).add(Gate::y(a + 3));
            c.add(Gate::swap(a, a + 3));
            add_block(c, sp, OV::Adjoint, 0);
            add_block(c, sp, OV::Transpose, 3);
            return {std::move(c), "000000", sc.k_small, sc.root, quantity_label(t)};
        }
        case TargetKind::Omega4: {
            const int a = axis;
            Circuit c(9);
            add_block(c, sp, OV::U, 0);
            add_block(c, sp, OV::U, 3);
            add_block(c, sp, OV::Conjugate, 6);
            for (int p = 1; p <= 3; ++p)
                if (p != a) c.add(Gate::y(p));
            c.add(Gate::y(a + 3));
            for (int w = 7; w <= 9; ++w) c.add(Gate::y(w));
            // 3-cycle on the copies of subsystem `a`: content a -> a+6,
            // a+6 -> a+3, a+3 -> a.
            std::vector<int> perm(9);
            for (int w = 1; w <= 9; ++w) perm[w - 1] = w;
            perm[a - 1] = a + 6;
            perm[a + 5] = a + 3;
            perm[a + 2] = a;
            c.add(Gate::permute(std::move(perm)));
            add_block(c, sp, OV::Transpose, 0);
            add_block(c, sp, OV::Adjoint, 3);
            add_block(c, sp, OV::Adjoint, 6);
            return {std::move(c), "000000000", sc.k_small, sc.root, quantity_label(t)};
        }
    }
    throw std::logic_error("build_small: bad target");
}

MeasuredCircuit build_bell(const InvariantTarget& t, const Circuit& prep, BellForm form) {
    check_prep_width(t, prep);
    const auto sp = std::make_shared<const Circuit>(prep);
    const BellLayout layout = bell_layout(t);
    const int n = prep.n_wires();
    const int width = n * static_cast<int>(layout.copies.size());
    const ScaleInfo sc = scale_info(t);

    Circuit c(width);
    for (std::size_t i = 0; i < layout.copies.size(); ++i)
        add_block(c, sp, layout.copies[i], static_cast<int>(i) * n);

    std::string outcome(width, '0');
    if (form == BellForm::Permutation) {
        // Move each contraction pair onto the adjacent slot wires (2i-1, 2i),
        // then apply the Bell gate adjoint as CNOT + H on the slot.
        std::vector<int> perm(width);
        for (std::size_t i = 0; i < layout.pairs.size(); ++i) {
            perm[layout.pairs[i].first - 1] = static_cast<int>(2 * i + 1);
            perm[layout.pairs[i].second - 1] = static_cast<int>(2 * i + 2);
        }
        c.add(Gate::permute(std::move(perm)));
        for (std::size_t i = 0; i < layout.pairs.size(); ++i) {
            const int a = static_cast<int>(2 * i + 1);
            c.add(Gate::cnot(a, a + 1)).add(Gate::h(a));
            if (layout.pairs[i].epsilon) {
                outcome[a - 1] = '1';
                outcome[a] = '1';
            }
        }
    } else {
        // Disjoint contraction pairs commute; emit in control order, the
        // order the ladders are written in.
        std::vector<BellPair> ladder = layout.pairs;
        std::sort(ladder.begin(), ladder.end(),
                  [](const BellPair& a, const BellPair& b) { return a.first < b.first; });
        for (const BellPair& p : ladder) c.add(Gate::cnot(p.first, p.second));
        for (const BellPair& p : ladder) c.add(Gate::h(p.first));
        for (const BellPair& p : ladder) {
            if (p.epsilon) {
                outcome[p.first - 1] = '1';
                outcome[p.second - 1] = '1';
            }
        }
    }
    const int k = sc.k_small + bell_scale_check(t);
    return {std::move(c), std::move(outcome), k, sc.root, quantity_label(t)};
}

int bell_scale_check(const InvariantTarget& t) {
    return static_cast<int>(bell_layout(t).pairs.size());
}

double target_oracle_value(const InvariantTarget& t, const State& psi) {
    if (psi.n_qubits() != target_state_qubits(t))
        throw std::invalid_argument("target_oracle_value: state width mismatch");
    switch (t.kind) {
        case TargetKind::Norm4_2q: return two_qubit_invariants(psi).n4;
        case TargetKind::Conc2_2q: return two_qubit_invariants(psi).c2;
        case TargetKind::Norm4_3q: {
            const double n2 = psi.norm2();
            return n2 * n2;
        }
        case TargetKind::Tau2: return 4.0 * std::norm(hyperdet_q(psi));
        case TargetKind::G4: {
            const double g2 = gamma(psi, check_subsystem(t)).norm2();
            return g2 * g2;
        }
        case TargetKind::C4: {
            const int a = check_subsystem(t);
            const InvariantSet inv = three_qubit_invariants(psi);
            return inv.c2[a - 1] * inv.c2[a - 1];
        }
        case TargetKind::Omega4: {
            const double w2 = 4.0 * t_tensor(psi).norm2();
            return w2 * w2;
        }
    }
    throw std::logic_error("target_oracle_value: bad target");
}

}  // namespace luinv
