#include "luinv/invariants.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace luinv {

namespace {

// epsilon_{ab} with epsilon_{01} = 1, epsilon_{10} = -1
inline double eps(int a, int b) { return static_cast<double>(b - a); }

inline cd amp3(const State& s, int i, int j, int k) {
    return s.amplitude(static_cast<std::uint64_t>((i << 2) | (j << 1) | k));
}

void require_qubits(const State& s, int n, const char* op) {
    if (s.n_qubits() != n)
        throw std::invalid_argument(std::string(op) + ": expected " + std::to_string(n) +
                                    "-qubit state");
}

}  // namespace

TwoQubitInvariants two_qubit_invariants(const State& state) {
    require_qubits(state, 2, "two_qubit_invariants");
    const cd a00 = state.amplitude(0), a01 = state.amplitude(1);
    const cd a10 = state.amplitude(2), a11 = state.amplitude(3);
    const double n2 = state.norm2();
    const cd det = a00 * a11 - a01 * a10;
    return {n2 * n2, 4.0 * std::norm(det)};
}

double GammaTensor::norm2() const {
    double r = 0;
    for (const cd& c : comp) r += std::norm(c);
    return r;
}

double TTensor::norm2() const {
    double r = 0;
    for (const cd& c : comp) r += std::norm(c);
    return r;
}

GammaTensor gamma(const State& state, int subsystem) {
    require_qubits(state, 3, "gamma");
    if (subsystem < 1 || subsystem > 3) throw std::invalid_argument("gamma: bad subsystem index");
    GammaTensor g{subsystem, {}};
    // gamma_a^{ii'} = eps_{jj'} eps_{kk'} psi^{...} psi^{...} with the two
    // epsilon contractions on the subsystems other than a.
    for (int i = 0; i < 2; ++i)
        for (int ip = 0; ip < 2; ++ip) {
            cd acc{0};
            for (int j = 0; j < 2; ++j)
                for (int jp = 0; jp < 2; ++jp)
                    for (int k = 0; k < 2; ++k)
                        for (int kp = 0; kp < 2; ++kp) {
                            const double w = eps(j, jp) * eps(k, kp);
                            if (w == 0.0) continue;
                            cd t;
                            switch (subsystem) {
                                case 1: t = amp3(state, i, j, k) * amp3(state, ip, jp, kp); break;
                                case 2: t = amp3(state, j, i, k) * amp3(state, jp, ip, kp); break;
                                default: t = amp3(state, j, k, i) * amp3(state, jp, kp, ip); break;
                            }
                            acc += w * t;
                        }
            g.comp[2 * i + ip] = acc;
        }
    return g;
}

TTensor t_tensor(const State& state) {
    require_qubits(state, 3, "t_tensor");
    TTensor t{};
    // T^{ijk} = -eps_{ll'} eps_{mm'} eps_{nn'} psi^{imn} psi^{lm'n'} psi^{l'jk}
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                cd acc{0};
                for (int l = 0; l < 2; ++l)
                    for (int lp = 0; lp < 2; ++lp)
                        for (int m = 0; m < 2; ++m)
                            for (int mp = 0; mp < 2; ++mp)
                                for (int n = 0; n < 2; ++n)
                                    for (int np = 0; np < 2; ++np) {
                                        const double w = eps(l, lp) * eps(m, mp) * eps(n, np);
                                        if (w == 0.0) continue;
                                        acc += w * amp3(state, i, m, n) * amp3(state, l, mp, np) *
                                               amp3(state, lp, j, k);
                                    }
                t.comp[4 * i + 2 * j + k] = -acc;
            }
    return t;
}

cd hyperdet_q(const State& state) {
    require_qubits(state, 3, "hyperdet_q");
    // q = eps_{ii'} eps_{jj'} eps_{kk'} eps_{ll'} eps_{mm'} eps_{nn'}
    //     psi^{ikl} psi^{jk'l'} psi^{i'mn} psi^{j'm'n'}
    cd acc{0};
    for (int i = 0; i < 2; ++i)
        for (int ip = 0; ip < 2; ++ip)
            for (int j = 0; j < 2; ++j)
                for (int jp = 0; jp < 2; ++jp) {
                    const double wij = eps(i, ip) * eps(j, jp);
                    if (wij == 0.0) continue;
                    for (int k = 0; k < 2; ++k)
                        for (int kp = 0; kp < 2; ++kp)
                            for (int l = 0; l < 2; ++l)
                                for (int lp = 0; lp < 2; ++lp) {
                                    const double wkl = eps(k, kp) * eps(l, lp);
                                    if (wkl == 0.0) continue;
                                    for (int m = 0; m < 2; ++m)
                                        for (int mp = 0; mp < 2; ++mp)
                                            for (int n = 0; n < 2; ++n)
                                                for (int np = 0; np < 2; ++np) {
                                                    const double w =
                                                        wij * wkl * eps(m, mp) * eps(n, np);
                                                    if (w == 0.0) continue;
                                                    acc += w * amp3(state, i, k, l) *
                                                           amp3(state, j, kp, lp) *
                                                           amp3(state, ip, m, n) *
                                                           amp3(state, jp, mp, np);
                                                }
                                }
                }
    return acc;
}

InvariantSet three_qubit_invariants(const State& state) {
    require_qubits(state, 3, "three_qubit_invariants");
    InvariantSet inv;
    inv.n2 = state.norm2();
    for (int a = 1; a <= 3; ++a) inv.g2[a - 1] = gamma(state, a).norm2();
    for (int a = 0; a < 3; ++a) inv.c2[a] = inv.g2[(a + 1) % 3] + inv.g2[(a + 2) % 3];
    inv.y2 = (2.0 / 3.0) * (inv.g2[0] + inv.g2[1] + inv.g2[2]);
    inv.omega2 = 4.0 * t_tensor(state).norm2();
    inv.tau2 = 4.0 * std::norm(hyperdet_q(state));
    return inv;
}

double concurrence_sq_from_partial_trace(const State& state, int subsystem) {
    require_qubits(state, 3, "concurrence_sq_from_partial_trace");
    if (subsystem < 1 || subsystem > 3)
        throw std::invalid_argument("concurrence_sq_from_partial_trace: bad subsystem index");
    // rho_a^{x x'} = sum over the traced pair of psi^{..x..} conj(psi^{..x'..})
    cd r00{0}, r01{0}, r11{0};
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
            auto pick = [&](int x) {
                switch (subsystem) {
                    case 1: return amp3(state, x, u, v);
                    case 2: return amp3(state, u, x, v);
                    default: return amp3(state, u, v, x);
                }
            };
            r00 += pick(0) * std::conj(pick(0));
            r01 += pick(0) * std::conj(pick(1));
            r11 += pick(1) * std::conj(pick(1));
        }
    const cd det = r00 * r11 - r01 * std::conj(r01);
    return 4.0 * det.real();
}

InvariantSet canonical_invariants(const CanonicalParams& p) {
    for (double l : p.lambda)
        if (l < 0.0) throw std::invalid_argument("canonical_invariants: lambda must be >= 0");
    const double e0 = p.lambda[0] * p.lambda[0];
    const double e2 = p.lambda[2] * p.lambda[2];
    const double e3 = p.lambda[3] * p.lambda[3];
    const double e4 = p.lambda[4] * p.lambda[4];
    const double e1 = p.lambda[1] * p.lambda[1];
    const cd delta = p.lambda[1] * p.lambda[4] * std::polar(1.0, p.theta) -
                     p.lambda[2] * p.lambda[3];
    const double d2 = std::norm(delta);
    const double norm2 = e0 + e1 + e2 + e3 + e4;

    InvariantSet inv;
    inv.n2 = norm2;
    inv.y2 = 8.0 * (e0 * e2 + e0 * e3 + d2) / 3.0 + 4.0 * e0 * e4;
    inv.c2 = {4.0 * e0 * (e2 + e3 + e4),
              4.0 * e0 * (e3 + e4) + 4.0 * d2,
              4.0 * e0 * (e2 + e4) + 4.0 * d2};
    inv.g2 = {2.0 * e0 * e4 + 4.0 * d2,
              2.0 * e0 * e4 + 4.0 * e0 * e2,
              2.0 * e0 * e4 + 4.0 * e0 * e3};
    inv.omega2 = 4.0 * e0 * e4 * norm2 - 16.0 * e0 * std::sqrt(e2 * e3) * delta.real();
    inv.tau2 = 16.0 * e0 * e0 * e4 * e4;
    return inv;
}

std::string invariant_set_to_json(const InvariantSet& inv) {
    nlohmann::ordered_json j;
    j["n2"] = inv.n2;
    j["y2"] = inv.y2;
    j["c2_1"] = inv.c2[0];
    j["c2_2"] = inv.c2[1];
    j["c2_3"] = inv.c2[2];
    j["g2_1"] = inv.g2[0];
    j["g2_2"] = inv.g2[1];
    j["g2_3"] = inv.g2[2];
    j["omega2"] = inv.omega2;
    j["tau2"] = inv.tau2;
    return j.dump();
}

InvariantSet invariant_set_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    InvariantSet inv;
    inv.n2 = j.at("n2").get<double>();
    inv.y2 = j.at("y2").get<double>();
    for (int a = 0; a < 3; ++a) {
        inv.c2[a] = j.at("c2_" + std::to_string(a + 1)).get<double>();
        inv.g2[a] = j.at("g2_" + std::to_string(a + 1)).get<double>();
    }
    inv.omega2 = j.at("omega2").get<double>();
    inv.tau2 = j.at("tau2").get<double>();
    return inv;
}

}  // namespace luinv
