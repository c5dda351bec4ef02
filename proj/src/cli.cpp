#include "luinv/cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "luinv/simulator.hpp"

namespace luinv::cli {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const std::array<InvariantTarget, 5>& sweep_targets() {
    static const std::array<InvariantTarget, 5> t = {
        InvariantTarget::c4(1), InvariantTarget::c4(2), InvariantTarget::c4(3),
        InvariantTarget::omega4(), InvariantTarget::tau2()};
    return t;
}

constexpr std::array<const char*, 5> kSweepColumns = {"c2_1", "c2_2", "c2_3", "omega2", "tau2"};

}  // namespace

State PrepSpec::state() const {
    if (canonical) return canonical_state(*canonical);
    if (family) return family_state(*family, theta);
    throw std::invalid_argument("PrepSpec: no state selected");
}

Circuit PrepSpec::prep_circuit() const {
    if (canonical) return dense_preparation(canonical_state(*canonical));
    if (family) return family_circuit(*family, theta);
    throw std::invalid_argument("PrepSpec: no state selected");
}

std::string PrepSpec::describe() const {
    if (canonical) {
        std::string s = "canonical=";
        for (int i = 0; i < 5; ++i) s += fmt(canonical->lambda[i]) + ",";
        s += fmt(canonical->theta);
        return s;
    }
    if (family) return "family=" + to_string(*family) + " theta=" + fmt(theta);
    return "unset";
}

Method method_from_string(const std::string& name) {
    if (name == "small") return Method::Small;
    if (name == "bell") return Method::Bell;
    throw std::invalid_argument("unknown method '" + name + "'");
}

BellForm form_from_string(const std::string& name) {
    if (name == "perm") return BellForm::Permutation;
    if (name == "cnot") return BellForm::CnotLadder;
    throw std::invalid_argument("unknown form '" + name + "'");
}

SweepResult cmd_sweep(const SweepOptions& opt) {
    if (opt.thetas.empty()) throw std::invalid_argument("cmd_sweep: empty theta grid");
    SweepResult result;
    std::uint64_t shot_seed = opt.seed;
    for (double theta : opt.thetas) {
        SweepRow row;
        row.theta = theta;
        const FamilyInvariants ex = exact_family_invariants(opt.family, theta);
        row.exact = {ex.c2[0], ex.c2[1], ex.c2[2], ex.omega2, ex.tau2};
        const Circuit prep = family_circuit(opt.family, theta);
        if (opt.shots) {
            row.estimate.emplace();
            row.std_error.emplace();
        }
        for (std::size_t i = 0; i < sweep_targets().size(); ++i) {
            const MeasuredCircuit mc = opt.method == Method::Small
                                           ? build_small(sweep_targets()[i], prep)
                                           : build_bell(sweep_targets()[i], prep, opt.form);
            row.circuit[i] = exact_estimate(mc).value;
            result.max_exact_circuit_gap =
                std::max(result.max_exact_circuit_gap, std::abs(row.circuit[i] - row.exact[i]));
            if (opt.shots) {
                const InvariantEstimate est = estimate_invariant(mc, *opt.shots, shot_seed++);
                (*row.estimate)[i] = est.value;
                (*row.std_error)[i] = est.std_error;
            }
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::string sweep_to_csv(const SweepOptions& opt, const SweepResult& result) {
    std::ostringstream out;
    out << "# luinv " << kToolVersion << "\n";
    out << "# family=" << to_string(opt.family)
        << " method=" << (opt.method == Method::Small ? "small" : "bell")
        << " form=" << (opt.form == BellForm::Permutation ? "perm" : "cnot") << " shots="
        << (opt.shots ? std::to_string(*opt.shots) : std::string("0")) << " seed=" << opt.seed
        << "\n";
    out << "theta";
    for (const char* c : kSweepColumns) out << ",exact_" << c;
    for (const char* c : kSweepColumns) out << ",circuit_" << c;
    if (opt.shots)
        for (const char* c : kSweepColumns) out << ",est_" << c << ",err_" << c;
    out << "\n";
    for (const SweepRow& row : result.rows) {
        out << fmt(row.theta);
        for (double v : row.exact) out << "," << fmt(v);
        for (double v : row.circuit) out << "," << fmt(v);
        if (row.estimate)
            for (int i = 0; i < 5; ++i)
                out << "," << fmt((*row.estimate)[i]) << "," << fmt((*row.std_error)[i]);
        out << "\n";
    }
    return out.str();
}

VerifyReport cmd_verify(const VerifyOptions& opt) {
    if (opt.trials < 1) throw std::invalid_argument("cmd_verify: trials must be >= 1");
    VerifyReport rep;
    const int n = target_state_qubits(opt.target);
    const int gap = bell_scale_check(opt.target);
    if (opt.base && opt.base->state().n_qubits() != n)
        throw std::invalid_argument("cmd_verify: base state width does not match target");
    for (int trial = 0; trial < opt.trials; ++trial) {
        const std::uint64_t trial_seed = opt.seed + static_cast<std::uint64_t>(trial);
        const State psi = opt.base ? random_lu_orbit(opt.base->state(), trial_seed)
                                   : random_state(n, trial_seed);
        const Circuit prep = dense_preparation(psi);
        const double oracle = target_oracle_value(opt.target, psi);
        if (opt.run_small) {
            const MeasuredCircuit mc = build_small(opt.target, prep);
            const double p = outcome_probability(inline_oracles(mc.circuit), mc.outcome);
            rep.max_dev_small =
                std::max(rep.max_dev_small, std::abs(std::ldexp(p, mc.scale_log2) - oracle));
        }
        if (opt.run_bell) {
            const MeasuredCircuit perm = build_bell(opt.target, prep, BellForm::Permutation);
            const MeasuredCircuit cnot = build_bell(opt.target, prep, BellForm::CnotLadder);
            const double pp = outcome_probability(inline_oracles(perm.circuit), perm.outcome);
            const double pc = outcome_probability(inline_oracles(cnot.circuit), cnot.outcome);
            rep.max_dev_bell_perm =
                std::max(rep.max_dev_bell_perm, std::abs(std::ldexp(pp, perm.scale_log2) - oracle));
            rep.max_dev_bell_cnot =
                std::max(rep.max_dev_bell_cnot, std::abs(std::ldexp(pc, cnot.scale_log2) - oracle));
            rep.max_form_gap = std::max(rep.max_form_gap, std::abs(pp - pc));
            const MeasuredCircuit small = build_small(opt.target, prep);
            if (perm.scale_log2 - small.scale_log2 != gap ||
                cnot.scale_log2 - small.scale_log2 != gap)
                rep.scale_gap_ok = false;
        }
    }
    rep.ok = rep.max_dev_small < opt.tol && rep.max_dev_bell_perm < opt.tol &&
             rep.max_dev_bell_cnot < opt.tol && rep.max_form_gap < 1e-12 && rep.scale_gap_ok;
    std::ostringstream out;
    out << "verify " << to_string(opt.target) << ": trials=" << opt.trials
        << " seed=" << opt.seed << " tol=" << fmt(opt.tol)
        << " preps=" << (opt.base ? "orbit of " + opt.base->describe() : "haar-random") << "\n";
    if (opt.run_small) out << "  max |2^k p - oracle| (small):     " << fmt(rep.max_dev_small) << "\n";
    if (opt.run_bell) {
        out << "  max |2^k p - oracle| (bell/perm): " << fmt(rep.max_dev_bell_perm) << "\n";
        out << "  max |2^k p - oracle| (bell/cnot): " << fmt(rep.max_dev_bell_cnot) << "\n";
        out << "  max |p_perm - p_cnot|:            " << fmt(rep.max_form_gap) << "\n";
        out << "  bell scale exponent gap = " << gap << ": "
            << (rep.scale_gap_ok ? "ok" : "MISMATCH") << "\n";
    }
    out << (rep.ok ? "OK" : "TOLERANCE BREACH") << "\n";
    rep.text = out.str();
    return rep;
}

Table3Report cmd_replicate_table3(const Table3Options& opt) {
    if (opt.instances < 1) throw std::invalid_argument("cmd_replicate_table3: instances >= 1");
    Table3Report report;
    std::uint64_t seed = opt.seed;
    for (FamilyId f : {FamilyId::OneCut, FamilyId::W, FamilyId::GHZ}) {
        Table3Row row;
        row.state_label = f == FamilyId::OneCut ? "1|23" : (f == FamilyId::W ? "W" : "GHZ");
        const double theta = representative_theta(f);
        const FamilyInvariants ex = exact_family_invariants(f, theta);
        row.exact = {ex.c2[0], ex.c2[1], ex.c2[2], ex.omega2, ex.tau2};
        std::vector<std::array<double, 5>> samples;
        for (int inst = 0; inst < opt.instances; ++inst) {
            const State rotated = random_lu_orbit(family_state(f, theta), seed++);
            const Circuit prep = dense_preparation(rotated);
            std::array<double, 5> values{};
            for (std::size_t i = 0; i < sweep_targets().size(); ++i) {
                const MeasuredCircuit mc = build_small(sweep_targets()[i], prep);
                values[i] = opt.shots ? estimate_invariant(mc, *opt.shots, seed++).value
                                      : exact_estimate(mc).value;
            }
            samples.push_back(values);
        }
        for (int i = 0; i < 5; ++i) {
            double mean = 0.0;
            for (const auto& s : samples) mean += s[i];
            mean /= static_cast<double>(samples.size());
            double var = 0.0;
            for (const auto& s : samples) var += (s[i] - mean) * (s[i] - mean);
            var /= static_cast<double>(samples.size());
            row.mean[i] = mean;
            row.variance[i] = var;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string table3_to_json(const Table3Options& opt, const Table3Report& report) {
    nlohmann::ordered_json j;
    j["tool"] = "luinv";
    j["version"] = kToolVersion;
    j["instances"] = opt.instances;
    j["seed"] = opt.seed;
    j["shots"] = opt.shots ? nlohmann::ordered_json(*opt.shots) : nlohmann::ordered_json(nullptr);
    j["method"] = "small";
    j["rows"] = nlohmann::ordered_json::array();
    for (const Table3Row& row : report.rows) {
        nlohmann::ordered_json r;
        r["state"] = row.state_label;
        for (int i = 0; i < 5; ++i) {
            r["mean_" + std::string(kSweepColumns[i])] = row.mean[i];
            r["var_" + std::string(kSweepColumns[i])] = row.variance[i];
            r["exact_" + std::string(kSweepColumns[i])] = row.exact[i];
        }
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2);
}

std::vector<double> parse_theta_grid(const std::string& text) {
    double start = 0.0, stop = 0.0;
    int steps = 0;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("theta grid must be start:stop:steps");
    try {
        start = std::stod(text.substr(0, c1));
        stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        steps = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("theta grid must be start:stop:steps");
    }
    if (steps < 1) throw std::invalid_argument("theta grid needs at least one step");
    std::vector<double> thetas(steps);
    for (int i = 0; i < steps; ++i)
        thetas[i] = start + static_cast<double>(i) * (stop - start) / steps;
    return thetas;
}

}  // namespace luinv::cli
