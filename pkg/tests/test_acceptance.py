"""The acceptance gate: every shipped guarantee, exercised at full scale.

Scale: 3 variables, operator order up to 3, coefficient degree up to 3,
coefficient magnitudes up to 5, 100 trials per law under a fixed seed.
Every check is an exact equality; there are no tolerances to tune.
Each criterion prints one 'ACCEPTANCE <name>: PASS|FAIL' line (visible
under pytest -s or in captured output).
"""

import math
import time

import pytest

import weylcalc.operators
from weylcalc.laws import ACCEPTANCE_CONFIG, run_all, run_law

from test_cli_golden import GOLDEN_CASES, run_case

_REQUIRED_AT_FULL_SCALE = [
    "compose-oracle",
    "gorder-eq-syntactic",
    "filtration-additivity",
    "commutator-drop",
    "jacobi",
    "weyl-relations",
    "diff1-split",
    "reconstruction",
    "leibniz-peel",
    "ideal-lemma",
    "symbol-mult",
    "gr-commutative",
    "quantize-roundtrip",
]


@pytest.fixture(scope="module")
def battery():
    start = time.perf_counter()
    reports = {r.law: r for r in run_all(ACCEPTANCE_CONFIG)}
    wall = time.perf_counter() - start
    return reports, wall


def _gate(name, ok, detail=""):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"{name}: {detail}"


def _gate_law(battery, name, extra_ok=True, detail=""):
    reports, _ = battery
    report = reports[name]
    ok = report.passed and report.trials == ACCEPTANCE_CONFIG.trials and extra_ok
    _gate(name, ok, detail or "; ".join(report.failures))


def test_compose_oracle(battery):
    # 100 trials, 10 fresh polynomials compared against applying twice in each
    _gate_law(battery, "compose-oracle")


def test_gorder_eq_syntactic(battery):
    # trial stream forces pure-multiplication and pure-derivation instances
    _gate_law(battery, "gorder-eq-syntactic")


def test_filtration_additivity(battery):
    _gate_law(battery, "filtration-additivity")


def test_commutator_drop(battery):
    _gate_law(battery, "commutator-drop")


def test_jacobi(battery):
    _gate_law(battery, "jacobi")


def test_weyl_relations(battery):
    # every pair i, j <= 3 each trial, under the convention [d_i, t_j] = delta_ij
    _gate_law(battery, "weyl-relations", extra_ok=ACCEPTANCE_CONFIG.n == 3)


def test_diff1_split(battery):
    _gate_law(battery, "diff1-split")


def test_reconstruction(battery):
    # includes the zero-table edge case at trial 0
    _gate_law(battery, "reconstruction")


def test_leibniz_peel(battery):
    _gate_law(battery, "leibniz-peel")


def test_ideal_lemma(battery):
    # even trials draw a principal ideal, odd trials a vanishing ideal,
    # so 100 trials split 50 + 50
    _gate_law(battery, "ideal-lemma", extra_ok=ACCEPTANCE_CONFIG.trials == 100)


def test_symbol_multiplicativity(battery):
    _gate_law(battery, "symbol-mult")


def test_gr_commutative(battery):
    _gate_law(battery, "gr-commutative")


def test_quantize_roundtrip(battery):
    _gate_law(battery, "quantize-roundtrip")


def test_cli_golden(tmp_path):
    ok = len(GOLDEN_CASES) >= 12
    parse_error_cases = [
        c
        for c in GOLDEN_CASES
        if c.get("code") == 2 and c.get("err", "").startswith("parse error at offset")
    ]
    ok = ok and len(parse_error_cases) >= 1
    failures = []
    for case in GOLDEN_CASES:
        try:
            run_case(case, tmp_path)
        except AssertionError as exc:
            failures.append(str(exc))
    _gate("cli-golden", ok and not failures, "; ".join(failures))


def test_mutation_smoke(battery, monkeypatch):
    # an off-by-one binomial inside compose must be caught by the oracle law
    def skewed(a, b):
        c = math.comb(a, b)
        return c + 1 if 0 < b < a else c

    monkeypatch.setattr(weylcalc.operators, "_binom", skewed)
    report = run_law("compose-oracle", ACCEPTANCE_CONFIG)
    monkeypatch.undo()
    caught = report.failure_count > 0 and len(report.failures) > 0
    _gate("mutation-smoke", caught, "broken composition slipped past 100 trials")


def test_runtime_budget(battery):
    reports, wall = battery
    ok = wall < 60.0 and set(_REQUIRED_AT_FULL_SCALE) <= set(reports)
    _gate("runtime-budget", ok, f"law battery took {wall:.1f}s")
