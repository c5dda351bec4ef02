import math

import pytest

import luinv


def test_version():
    assert luinv.__version__ == "0.1.0"


def test_ghz_invariants():
    theta = luinv.representative_theta("ghz")
    inv = luinv.three_qubit_invariants(luinv.family_state("ghz", theta))
    for key in ("c2_1", "c2_2", "c2_3", "omega2", "tau2"):
        assert inv[key] == pytest.approx(1.0, abs=1e-12)
    assert luinv.classify(inv)["slocc_class"] == "GHZ"


def test_w_invariants_and_class():
    theta = luinv.representative_theta("w")
    inv = luinv.three_qubit_invariants(luinv.family_state("w", theta))
    assert inv["c2_1"] == pytest.approx(8.0 / 9.0, abs=1e-12)
    assert inv["omega2"] == pytest.approx(16.0 / 27.0, abs=1e-12)
    assert inv["tau2"] == pytest.approx(0.0, abs=1e-12)
    assert luinv.classify(inv)["slocc_class"] == "W"


def test_small_circuit_measures_tau2():
    prep = luinv.family_circuit("ghz", luinv.representative_theta("ghz"))
    mc = luinv.build_small("tau2", prep)
    assert mc.outcome == "000000"
    assert mc.scale_log2 == 2
    est = luinv.exact_estimate(mc)
    assert est.raw_probability == pytest.approx(0.25, abs=1e-12)
    assert est.value == pytest.approx(1.0, abs=1e-12)


def test_bell_forms_agree():
    psi = luinv.random_state(3, 12)
    prep = luinv.dense_preparation(psi)
    oracle = luinv.target_oracle_value("g4_2", psi)
    for form in ("perm", "cnot"):
        mc = luinv.build_bell("g4_2", prep, form)
        p = luinv.outcome_probability(mc.circuit, mc.outcome)
        assert 2**mc.scale_log2 * p == pytest.approx(oracle, abs=1e-9)
    assert luinv.bell_scale_check("g4_2") == 6


def test_openqasm_export():
    text = luinv.family_circuit("ghz", math.pi / 2).openqasm()
    assert text.startswith("OPENQASM 3.0;")
    assert "ry(1.5707963267948966) q[0];" in text
    assert text.count("cx ") == 2


def test_sampling_is_seeded():
    prep = luinv.family_circuit("ghz", math.pi / 2)
    a = luinv.sample(prep, 500, seed=4)
    b = luinv.sample(prep, 500, seed=4)
    assert a == b
    assert sum(a.values()) == 500
    assert set(a) <= {"000", "111"}


def test_canonical_forms_match_contraction():
    lambdas = [0.5, 0.3, 0.4, 0.2, 0.6]
    closed = luinv.canonical_invariants(lambdas, 0.8)
    direct = luinv.three_qubit_invariants(luinv.canonical_state(lambdas, 0.8))
    for key, value in closed.items():
        assert direct[key] == pytest.approx(value, abs=1e-10)
