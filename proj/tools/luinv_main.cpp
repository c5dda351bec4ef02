// luinv: compute, synthesize, simulate, sweep, verify, classify and report
// local-unitary invariants of two- and three-qubit states.
//
// Exit codes: 0 success, 1 tolerance breach, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "luinv/cli.hpp"
#include "luinv/classify.hpp"
#include "luinv/simulator.hpp"
#include "luinv/synthesis.hpp"

namespace {

using namespace luinv;

struct ToleranceBreach : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << text;
}

FamilyId family_from_string(const std::string& name) {
    if (name == "onecut") return FamilyId::OneCut;
    if (name == "w") return FamilyId::W;
    if (name == "ghz") return FamilyId::GHZ;
    throw CLI::ValidationError("--family", "must be one of onecut|w|ghz");
}

CanonicalParams canonical_from_string(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    if (vals.size() != 6)
        throw CLI::ValidationError("--canonical", "expects l0,l1,l2,l3,l4,theta");
    CanonicalParams p;
    for (int i = 0; i < 5; ++i) p.lambda[i] = vals[i];
    p.theta = vals[5];
    return p;
}

struct PrepFlags {
    std::string family;
    double theta = 0.0;
    std::string canonical;

    void attach(CLI::App* cmd) {
        auto* f = cmd->add_option("--family", family, "state family: onecut|w|ghz");
        cmd->add_option("--theta", theta, "family parameter in radians");
        auto* c = cmd->add_option("--canonical", canonical,
                                  "normal-form parameters l0,l1,l2,l3,l4,theta");
        c->excludes(f);
    }

    cli::PrepSpec spec() const {
        cli::PrepSpec s;
        if (!canonical.empty()) {
            s.canonical = canonical_from_string(canonical);
        } else if (!family.empty()) {
            s.family = family_from_string(family);
            s.theta = theta;
        } else {
            throw CLI::ValidationError("prep", "need --family or --canonical");
        }
        return s;
    }
};

std::string meta_json_header(std::optional<long long> shots, std::uint64_t seed,
                             const std::string& method) {
    nlohmann::ordered_json j;
    j["tool"] = "luinv";
    j["version"] = cli::kToolVersion;
    j["method"] = method;
    j["shots"] = shots ? nlohmann::ordered_json(*shots) : nlohmann::ordered_json(nullptr);
    j["seed"] = seed;
    return j.dump();
}

int run_cli(int argc, char** argv) {
    CLI::App app{"direct measurement of local-unitary invariants of 2- and 3-qubit states"};
    app.require_subcommand(1);

    // ---- compute ----------------------------------------------------
    auto* compute = app.add_subcommand("compute", "invariants of a state by direct contraction");
    PrepFlags compute_prep;
    compute_prep.attach(compute);
    std::string compute_out;
    compute->add_option("--out", compute_out, "output file (default stdout)");
    compute->callback([&] {
        const cli::PrepSpec spec = compute_prep.spec();
        const State psi = spec.state();
        nlohmann::ordered_json j;
        j["tool"] = "luinv";
        j["version"] = cli::kToolVersion;
        j["state"] = spec.describe();
        j["invariants"] = nlohmann::ordered_json::parse(
            invariant_set_to_json(three_qubit_invariants(psi)));
        write_output(j.dump(2), compute_out);
    });

    // ---- synthesize -------------------------------------------------
    auto* synth = app.add_subcommand("synthesize", "compile a target invariant into a circuit");
    PrepFlags synth_prep;
    synth_prep.attach(synth);
    std::string synth_target = "tau2", synth_method = "small", synth_form = "perm";
    std::string synth_format = "qasm", synth_out;
    synth->add_option("--target", synth_target, "invariant target")->required();
    synth->add_option("--method", synth_method, "small|bell");
    synth->add_option("--form", synth_form, "perm|cnot (bell method only)");
    synth->add_option("--format", synth_format, "qasm|json");
    synth->add_option("--out", synth_out, "output file (default stdout)");
    synth->callback([&] {
        const InvariantTarget target = target_from_string(synth_target);
        const Circuit prep = synth_prep.spec().prep_circuit();
        const MeasuredCircuit mc =
            cli::method_from_string(synth_method) == cli::Method::Small
                ? build_small(target, prep)
                : build_bell(target, prep, cli::form_from_string(synth_form));
        std::ostringstream head;
        head << "// luinv " << cli::kToolVersion << "\n"
             << "// target " << to_string(target) << " method " << synth_method << "\n"
             << "// contract: " << mc.quantity << " = (2^" << mc.scale_log2 << " * p_"
             << mc.outcome << ")^(1/" << mc.root << ")\n";
        if (synth_format == "qasm") {
            write_output(head.str() + to_openqasm(inline_oracles(mc.circuit)), synth_out);
        } else if (synth_format == "json") {
            nlohmann::ordered_json j;
            j["tool"] = "luinv";
            j["version"] = cli::kToolVersion;
            j["target"] = to_string(target);
            j["method"] = synth_method;
            j["measured_circuit"] =
                nlohmann::ordered_json::parse(measured_circuit_to_json(mc));
            write_output(j.dump(2), synth_out);
        } else {
            throw CLI::ValidationError("--format", "must be qasm|json");
        }
    });

    // ---- simulate ---------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "run a measured circuit exactly or with shots");
    PrepFlags sim_prep;
    sim_prep.attach(sim);
    std::string sim_target = "tau2", sim_method = "small", sim_form = "perm", sim_out;
    std::optional<long long> sim_shots;
    std::uint64_t sim_seed = 0;
    sim->add_option("--target", sim_target, "invariant target")->required();
    sim->add_option("--method", sim_method, "small|bell");
    sim->add_option("--form", sim_form, "perm|cnot");
    sim->add_option("--shots", sim_shots, "shot count (omit for the exact value)");
    sim->add_option("--seed", sim_seed, "sampling seed");
    sim->add_option("--out", sim_out, "output file (default stdout)");
    sim->callback([&] {
        const InvariantTarget target = target_from_string(sim_target);
        const cli::PrepSpec spec = sim_prep.spec();
        const Circuit prep = spec.prep_circuit();
        const MeasuredCircuit mc = cli::method_from_string(sim_method) == cli::Method::Small
                                       ? build_small(target, prep)
                                       : build_bell(target, prep, cli::form_from_string(sim_form));
        const InvariantEstimate est =
            sim_shots ? estimate_invariant(mc, *sim_shots, sim_seed) : exact_estimate(mc);
        nlohmann::ordered_json j =
            nlohmann::ordered_json::parse(meta_json_header(sim_shots, sim_seed, sim_method));
        j["target"] = to_string(target);
        j["prep"] = spec.describe();
        j["outcome"] = mc.outcome;
        j["scale_log2"] = mc.scale_log2;
        j["root"] = mc.root;
        j["quantity"] = est.quantity;
        j["raw_probability"] = est.raw_probability;
        j["value"] = est.value;
        j["std_error"] = est.std_error;
        write_output(j.dump(2), sim_out);
    });

    // ---- sweep ------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "invariants along a theta grid, CSV output");
    std::string sweep_family = "ghz", sweep_grid = "0:6.283185307179586:64";
    std::string sweep_method = "small", sweep_form = "perm", sweep_out, sweep_format = "csv";
    std::optional<long long> sweep_shots;
    std::uint64_t sweep_seed = 0;
    sweep->add_option("--family", sweep_family, "onecut|w|ghz")->required();
    sweep->add_option("--theta-grid", sweep_grid, "start:stop:steps");
    sweep->add_option("--method", sweep_method, "small|bell");
    sweep->add_option("--form", sweep_form, "perm|cnot");
    sweep->add_option("--shots", sweep_shots, "shot count per point (omit for exact only)");
    sweep->add_option("--seed", sweep_seed, "sampling seed");
    sweep->add_option("--format", sweep_format, "csv");
    sweep->add_option("--out", sweep_out, "output file (default stdout)");
    sweep->callback([&] {
        if (sweep_format != "csv") throw CLI::ValidationError("--format", "sweep emits csv");
        cli::SweepOptions opt;
        opt.family = family_from_string(sweep_family);
        opt.thetas = cli::parse_theta_grid(sweep_grid);
        opt.method = cli::method_from_string(sweep_method);
        opt.form = cli::form_from_string(sweep_form);
        opt.shots = sweep_shots;
        opt.seed = sweep_seed;
        const cli::SweepResult res = cli::cmd_sweep(opt);
        write_output(cli::sweep_to_csv(opt, res), sweep_out);
        if (res.max_exact_circuit_gap > 1e-9)
            throw ToleranceBreach("exact and circuit columns diverge by " +
                                  std::to_string(res.max_exact_circuit_gap));
    });

    // ---- verify -----------------------------------------------------
    auto* verify = app.add_subcommand("verify", "oracle-vs-circuit regression for one target");
    PrepFlags verify_prep;
    verify_prep.attach(verify);
    std::string verify_target = "tau2", verify_methods = "small,bell";
    int verify_trials = 50;
    std::uint64_t verify_seed = 1;
    double verify_tol = 1e-9;
    verify->add_option("--target", verify_target, "invariant target")->required();
    verify->add_option("--methods", verify_methods, "small,bell or a single method");
    verify->add_option("--trials", verify_trials,
                       "number of random preparations (orbit samples when a state is given)");
    verify->add_option("--seed", verify_seed, "seed of the first preparation");
    verify->add_option("--tol", verify_tol, "tolerance for |2^k p - oracle|");
    verify->callback([&] {
        cli::VerifyOptions opt;
        opt.target = target_from_string(verify_target);
        opt.run_small = verify_methods.find("small") != std::string::npos;
        opt.run_bell = verify_methods.find("bell") != std::string::npos;
        if (!opt.run_small && !opt.run_bell)
            throw CLI::ValidationError("--methods", "must name small and/or bell");
        opt.trials = verify_trials;
        opt.seed = verify_seed;
        opt.tol = verify_tol;
        if (!verify_prep.family.empty() || !verify_prep.canonical.empty())
            opt.base = verify_prep.spec();
        const cli::VerifyReport rep = cli::cmd_verify(opt);
        std::cout << rep.text;
        if (!rep.ok) throw ToleranceBreach("verification tolerance breach");
    });

    // ---- classify ---------------------------------------------------
    auto* cls = app.add_subcommand("classify", "SLOCC class of an invariant record (JSON)");
    std::string cls_in;
    double cls_tol = 1e-9;
    cls->add_option("--in", cls_in, "invariant JSON file (default stdin)");
    cls->add_option("--tol", cls_tol, "zero threshold");
    cls->callback([&] {
        std::string text;
        if (cls_in.empty()) {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream in(cls_in);
            if (!in) throw std::runtime_error("cannot open '" + cls_in + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        // accept either a flat record or the `compute` wrapper
        auto parsed = nlohmann::json::parse(text);
        if (parsed.contains("invariants")) parsed = parsed["invariants"];
        const InvariantSet inv = invariant_set_from_json(parsed.dump());
        const Classification r = classify(inv, cls_tol);
        std::cout << "class: " << to_string(r.cls) << "\n";
        const auto names = pattern_column_names();
        std::cout << "pattern (>" << cls_tol << "):";
        for (int i = 0; i < 10; ++i)
            std::cout << " " << names[i] << "=" << (r.positive[i] ? ">0" : "0");
        std::cout << "\n";
        if (!r.consistent) std::cout << "warning: inconsistent pattern: " << r.diagnostics << "\n";
    });

    // ---- replicate-table3 --------------------------------------------
    auto* t3 = app.add_subcommand("replicate-table3",
                                  "orbit-averaged invariants of the representing states");
    int t3_instances = 10;
    std::uint64_t t3_seed = 7;
    std::optional<long long> t3_shots;
    std::string t3_out;
    t3->add_option("--instances", t3_instances, "orbit samples per state");
    t3->add_option("--seed", t3_seed, "orbit sampling seed");
    t3->add_option("--shots", t3_shots, "shot count (omit for exact mode)");
    t3->add_option("--out", t3_out, "output file (default stdout)");
    t3->callback([&] {
        cli::Table3Options opt;
        opt.instances = t3_instances;
        opt.seed = t3_seed;
        opt.shots = t3_shots;
        const cli::Table3Report rep = cli::cmd_replicate_table3(opt);
        write_output(cli::table3_to_json(opt, rep), t3_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ToleranceBreach& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
