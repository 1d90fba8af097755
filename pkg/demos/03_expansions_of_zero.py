#!/usr/bin/env python3
"""Watching expansions of the zero function converge.

sum_q G(q) c_q(a) -> 0 for G(q) = 1/q and G(q) = 1/phi(q): pointwise, at
prime-number-theorem speed, never absolutely.  Exotic coefficients are the
opposite extreme: the indicator of the powers of p0 reaches 0 *exactly*
once the truncation passes p0^(v_p0(a)+1), because only the prime-power
column survives and the column cancels.
"""

from ramanujan_cloud import (
    catalog,
    detect_convergence,
    expansion_partial_sums,
    valuation,
    zero_cloud_verdict,
)
from ramanujan_cloud.config import EngineConfig


def show_classical_decay(a: int = 6) -> None:
    print(f"--- Partial sums of the classical expansions at a = {a} ---")
    print(f"  {'Q':>9}  {'1/q coefficient':>18}  {'1/phi(q) coefficient':>21}")
    gr, gh = catalog("GR"), catalog("GH")
    for Q in (10**3, 10**4, 10**5, 10**6):
        r = float(expansion_partial_sums(gr, a, Q, checkpoints=[Q]).final)
        h = float(expansion_partial_sums(gh, a, Q, checkpoints=[Q]).final)
        print(f"  {Q:>9}  {r:>18.8f}  {h:>21.8f}")
    series = expansion_partial_sums(gr, a, 10**6)
    verdict = detect_convergence(series, target=0, window=32, tol=0.02)
    print(f"  verdict at tol 0.02: {verdict.outcome}, window spread {verdict.spread:.5f}\n")


def show_exact_exotic_zero(p0: int = 2) -> None:
    print(f"--- Indicator of the powers of {p0}: exact zeros ---")
    G = catalog("indicator_prime_powers", p0=p0)
    for a in (1, 5, 12, 48, 96):
        v = valuation(p0, a)
        Q = p0 ** (v + 1)
        series = expansion_partial_sums(G, a, Q, checkpoints=list(range(1, Q + 1)), exact=True)
        tail = [str(x) for x in series.values()[-4:]]
        print(f"  a = {a:>3}: truncation Q = {Q:>4}, last partial sums {tail} -> exactly {series.final}")
    print()


def show_membership_verdicts() -> None:
    print("--- Zero-cloud membership verdicts (fast config: Q = 10^5) ---")
    cfg = EngineConfig(Q=10**5, sample_a=tuple(range(1, 13)))
    for name, G in [
        ("GR", catalog("GR")),
        ("GH", catalog("GH")),
        ("indicator_prime_powers(2)", catalog("indicator_prime_powers", p0=2)),
        ("weakly_exotic_sample", catalog("weakly_exotic_sample")),
    ]:
        verdict = zero_cloud_verdict(G, cfg)
        print(f"  {name:<26} {verdict.classification:<14} -> {verdict.conclusion}")
        for condition, status in verdict.hypothesis_checks:
            print(f"      [{status}] {condition}")
    print()


if __name__ == "__main__":
    show_classical_decay()
    show_exact_exotic_zero()
    show_membership_verdicts()
    print("Done.")
