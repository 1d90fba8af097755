"""Acceptance battery: every headline requirement at its pinned tolerance.

Each test drives one check from ramanujan_cloud.reproduce (the same code
behind `reproduce-all`) and prints a PASS/FAIL line; run with `pytest -s`
to see them.  The final test executes the full driver end to end and
inspects its artifacts.
"""

import json

from ramanujan_cloud.config import EngineConfig
from ramanujan_cloud import reproduce

CFG = EngineConfig()


def report(result: dict, detail: str = "") -> None:
    status = "PASS" if result["pass"] else "FAIL"
    elapsed = result.get("elapsed_s", 0.0)
    suffix = f"  [{detail}]" if detail else ""
    print(f"{status}  {result['name']}  ({elapsed:.1f}s){suffix}")


def test_01_formula_agreement_on_full_grid():
    result = reproduce.check_formula_agreement(CFG)
    report(result, f"{result['triples_checked']} triples, exact equality, < {result['time_budget_s']}s")
    assert result["mismatches"] == []
    assert result["elapsed_s"] < result["time_budget_s"]
    assert result["pass"]


def test_02_prime_power_columns_cancel_exactly():
    result = reproduce.check_column_cancellation(CFG)
    report(result, "p <= 50, a <= 200, exact zeros")
    assert result["failures"] == []
    assert result["pass"]


def test_03_exotic_expansions_vanish_exactly():
    result = reproduce.check_exotic_exact_zero(CFG)
    report(result, "p0 in {2,3,5}, a <= 1000, exact zero at Q = p0^(v+1)")
    assert result["failures"] == []
    assert result["elapsed_s"] < result["time_budget_s"]
    assert result["pass"]


def test_04_classification_fixtures_exact():
    result = reproduce.check_classification_fixtures(CFG)
    report(result, "GR normal, GH sporadic F={2} PG=2 aG=2, G2 exotic F0={2}")
    assert result["reports"]["GR"]["classification"] == "normal"
    assert result["reports"]["GH"]["classification"] == "sporadic"
    assert result["reports"]["GH"]["PG"] == 2
    assert result["reports"]["GH"]["aG"] == 2
    assert result["reports"]["indicator_prime_powers(p0=2)"]["classification"] == "exotic"
    assert result["pass"]


def test_05_peel_identities_exhaustive():
    result = reproduce.check_peel_identities(CFG)
    report(result, f"{result['identities_checked']} identities, exact, < {result['time_budget_s']}s")
    assert result["failures"] == []
    assert result["elapsed_s"] < result["time_budget_s"]
    assert result["pass"]


def test_06_abel_summed_forms_agree_on_random_rules():
    result = reproduce.check_abel_forms(CFG)
    report(result, "500 randomized exact rational rules, a <= 500")
    assert result["trials"] == 500
    assert result["failures"] == []
    assert result["pass"]


def test_07_absolute_series_factorization_within_tail():
    result = reproduce.check_absolute_split(CFG)
    report(result, "finite factor x cofactor vs direct, a <= 100, Q = 10^4")
    assert result["failures"] == []
    assert result["pass"]


def test_08_classical_expansions_converge_to_zero():
    result = reproduce.check_pointwise_zero(CFG)
    worst = max(row["window_spread"] for row in result["rows"])
    report(result, f"Q = 10^6, tol 0.02, worst window spread {worst:.4f}")
    assert all(row["outcome"] == "converges_to" for row in result["rows"])
    assert worst <= 0.02
    assert result["pass"]


def test_09_prime_abs_sums_keep_growing():
    result = reproduce.check_slow_divergence(CFG)
    report(result, "last-decade increase > 0.05 at 10^6 for GR, GH, G0")
    for row in result["rows"]:
        assert row["last_decade_increase"] > 0.05
        assert row["prime_abs_verdict"] == "diverging"
    assert result["pass"]


def test_10_squarefree_densities_within_one_percent():
    result = reproduce.check_squarefree_densities(CFG)
    worst = max(row["rel_error"] for row in result["rows"])
    report(result, f"x = 10^6, worst relative error {worst:.2e}")
    assert all(row["rel_error"] < 0.01 for row in result["rows"])
    assert result["elapsed_s"] < result["time_budget_s"]
    assert result["pass"]


def test_11_balanced_counterexample_behaviors():
    result = reproduce.check_balanced_counterexample(CFG)
    report(
        result,
        f"windows < 0.05 for y >= 1e5; odd final {result['odd_final']:.1f} > 10; "
        f"exponent {result['odd_growth_exponent']:.3f} in 0.4 +- 0.1",
    )
    assert all(w["abs_sum"] < 0.05 for w in result["window_sums"])
    assert result["odd_final"] > 10
    assert abs(result["odd_growth_exponent"] - 0.4) <= 0.1
    assert result["pass"]


def test_12_reproduce_all_zero_cloud_verdicts(tmp_path):
    # Runs the full driver end to end: every artifact must pass, and the
    # membership battery must put all five entries in the zero cloud with
    # every hypothesis check recorded as passed.
    lines = []
    code = reproduce.run_all(tmp_path, CFG, echo=lines.append)
    print()
    for line in lines:
        print("   ", line)
    assert code == 0
    artifacts = sorted(p.name for p in tmp_path.glob("*.json"))
    assert len(artifacts) == len(reproduce.CHECKS)

    battery = json.loads((tmp_path / "12_zero_cloud_battery.json").read_text())
    result = {"name": "zero_cloud_battery", "pass": battery["pass"], "elapsed_s": 0.0}
    report(result, "GR, GH, G2, G0, weakly exotic sample all in the zero cloud")
    assert battery["pass"]
    expected = {
        "GR": ("normal", "in_zero_cloud"),
        "GH": ("sporadic", "in_zero_cloud"),
        "indicator_prime_powers(p0=2)": ("exotic", "in_zero_cloud"),
        "G0(p0=2)": ("exotic", "in_zero_cloud"),
        "weakly_exotic_sample(p0=2)": ("weakly_exotic", "in_zero_cloud"),
    }
    seen = {v["label"]: (v["classification"], v["conclusion"]) for v in battery["verdicts"]}
    assert seen == expected
    for verdict in battery["verdicts"]:
        assert all(status == "pass" for _, status in verdict["hypothesis_checks"])
