#!/usr/bin/env python3
"""Absolute convergence is an exotic-only privilege.

For multiplicative G the absolute series converges iff |G| is summable
over the primes, and the absolute series factors exactly into a finite
part times a squarefree cofactor.  The classical coefficients fail the
prime test (their partial sums creep up like log log x forever), and so
does the 1-on-powers-of-2, 1/p-elsewhere hybrid: pointwise convergence
to zero without absolute convergence.
"""

from fractions import Fraction

from ramanujan_cloud import MultiplicativeFunction, absolute_convergence_report, catalog


def entries():
    prop2_style = MultiplicativeFunction(
        "invisible3_inverse_squares",
        rule=lambda p, e: 1 if p == 3 else Fraction(1, p ** (2 * e)),
        exact=True,
        declared_transparent=frozenset({3}),
        declared_invisible=frozenset({3}),
    )
    return [
        ("GR (1/q)", catalog("GR")),
        ("GH (1/phi)", catalog("GH")),
        ("G0 (1 on 2-powers, 1/p off)", catalog("G0", p0=2)),
        ("indicator of 2-powers", catalog("indicator_prime_powers", p0=2)),
        ("inverse squares off 3", prop2_style),
    ]


def show_prime_sums() -> None:
    print("--- Growth of sum over p <= B of |G(p)| ---")
    print(f"  {'entry':<30} {'B=10^4':>10} {'B=10^5':>10} {'B=10^6':>10} {'last-decade':>12}  verdict")
    for name, G in entries():
        rep = absolute_convergence_report(G, 10**6, 1, 1000)
        at = dict(rep.prime_abs_series.checkpoints)
        print(
            f"  {name:<30} {at[10**4]:>10.4f} {at[10**5]:>10.4f} {at[10**6]:>10.4f} "
            f"{rep.prime_abs_last_decade_increase:>12.4f}  {rep.prime_abs_verdict}"
        )
    print()


def show_factorized_absolute_series(a: int = 6) -> None:
    print(f"--- Absolute series split at a = {a}, Q = 10^4 ---")
    for name, G in entries()[3:]:
        rep = absolute_convergence_report(G, 10**4, a, 10**4)
        print(f"  {name}:")
        print(f"      direct truncated sum   = {rep.factor_lhs:.10f}")
        print(f"      finite x cofactor      = {rep.factor_finite * rep.factor_cofactor:.10f}")
        print(f"      discrepancy            = {rep.factor_discrepancy:.3e}")
        print(f"      computed tail bound    = {rep.factor_tail_bound:.3e}")
    print()


def show_verdicts() -> None:
    print("--- Overall verdicts (summable primes AND an invisible prime) ---")
    for name, G in entries():
        rep = absolute_convergence_report(G, 10**5, 2, 5000)
        print(f"  {name:<30} classification = {rep.classification:<9} verdict = {rep.verdict}")
    print()


if __name__ == "__main__":
    show_prime_sums()
    show_factorized_absolute_series()
    show_verdicts()
    print("Done.")
