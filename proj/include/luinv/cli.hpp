// Command implementations behind the command-line tool: sweeps, the
// oracle-vs-circuit regression harness and the orbit-averaged report.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "luinv/invariants.hpp"
#include "luinv/states.hpp"
#include "luinv/synthesis.hpp"

namespace luinv::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// State selection shared by several commands: a family point or an
/// explicit normal form.
struct PrepSpec {
    std::optional<FamilyId> family;
    double theta = 0.0;
    std::optional<CanonicalParams> canonical;

    State state() const;
    /// Family points use their printed gate sequences; normal-form states
    /// fall back to the dense preparation unitary.
    Circuit prep_circuit() const;
    std::string describe() const;
};

enum class Method { Small, Bell };

Method method_from_string(const std::string& name);
BellForm form_from_string(const std::string& name);

struct SweepOptions {
    FamilyId family = FamilyId::GHZ;
    std::vector<double> thetas;
    Method method = Method::Small;
    BellForm form = BellForm::Permutation;
    std::optional<long long> shots;
    std::uint64_t seed = 0;
};

/// Invariant order of the five measured columns: c2_1, c2_2, c2_3,
/// omega2, tau2.
struct SweepRow {
    double theta = 0.0;
    std::array<double, 5> exact{};
    std::array<double, 5> circuit{};
    std::optional<std::array<double, 5>> estimate;
    std::optional<std::array<double, 5>> std_error;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double max_exact_circuit_gap = 0.0;
};

SweepResult cmd_sweep(const SweepOptions& opt);
std::string sweep_to_csv(const SweepOptions& opt, const SweepResult& result);

struct VerifyOptions {
    InvariantTarget target = InvariantTarget::tau2();
    bool run_small = true;
    bool run_bell = true;
    int trials = 50;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    /// When set, trials draw from the local-unitary orbit of this state;
    /// otherwise each trial uses an independent Haar-random state.
    std::optional<PrepSpec> base;
};

struct VerifyReport {
    double max_dev_small = 0.0;
    double max_dev_bell_perm = 0.0;
    double max_dev_bell_cnot = 0.0;
    double max_form_gap = 0.0;  // |p_perm - p_cnot|
    bool scale_gap_ok = true;
    bool ok = true;
    std::string text;
};

VerifyReport cmd_verify(const VerifyOptions& opt);

struct Table3Options {
    int instances = 10;
    std::uint64_t seed = 7;
    std::optional<long long> shots;
};

struct Table3Row {
    std::string state_label;
    std::array<double, 5> mean{};      // c2_1, c2_2, c2_3, omega2, tau2
    std::array<double, 5> variance{};
    std::array<double, 5> exact{};
};

struct Table3Report {
    std::vector<Table3Row> rows;
};

Table3Report cmd_replicate_table3(const Table3Options& opt);
std::string table3_to_json(const Table3Options& opt, const Table3Report& report);

/// start:stop:steps -> steps points theta_i = start + i (stop-start)/steps.
std::vector<double> parse_theta_grid(const std::string& text);

}  // namespace luinv::cli
