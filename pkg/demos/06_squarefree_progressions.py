#!/usr/bin/env python3
"""Squarefree numbers in progressions, and the convergence trap they set.

Squarefree numbers have density c(m) in each reduced class mod m; mod 4
the three reduced classes split the mass 1/3 + 1/3 + 1/3, so odd
squarefree numbers outnumber even ones exactly two to one.  Weight the
even ones by -2 and the masses balance: the resulting series converges
while its odd-only restriction blows up like x^(1-s).  Convergence of a
restricted Mobius-type series therefore does NOT survive adding one more
coprimality condition.
"""

from ramanujan_cloud import (
    balanced_series_demo,
    count_squarefree_in_ap,
    hooley_constant,
    weighted_squarefree_sum,
)


def show_densities(x: int = 10**6) -> None:
    print(f"--- Squarefree counts up to {x:,} ---")
    print(f"  {'class':<12} {'count':>9} {'density':>10} {'c(m)':>10} {'rel err':>10}")
    for m, r in ((1, 1), (2, 1), (4, 1), (4, 3)):
        n = count_squarefree_in_ap(x, m, r)
        c = hooley_constant(m)
        print(f"  {f'{r} mod {m}':<12} {n:>9} {n / x:>10.6f} {c:>10.6f} {abs(n / x - c) / c:>10.2e}")
    print()


def show_weighted_sums(s: float = 0.6) -> None:
    print(f"--- Weighted sums over squarefree q = 1 mod 2, s = {s} ---")
    print(f"  {'(y, x]':<22} {'computed':>12} {'predicted':>12} {'|diff|/y^(1/2-s)':>18}")
    for y, x in ((10**3, 10**5), (10**4, 10**6)):
        computed, predicted = weighted_squarefree_sum(s, 2, 1, y, x)
        scale = y ** (0.5 - s)
        print(f"  ({y:>7,}, {x:>9,}] {computed:>12.4f} {predicted:>12.4f} "
              f"{abs(computed - predicted) / scale:>18.4f}")
    print()


def show_counterexample(s: float = 0.6) -> None:
    print(f"--- The balanced series at s = {s}, run to 10^6 ---")
    demo = balanced_series_demo(s, 10**6)
    print("  full-series window sums |sum over (y, 2y]| (Cauchy criterion):")
    for y, w in demo.window_sums:
        print(f"      y = {y:>7,}: {w:.5f}")
    print(f"  windows below {demo.window_threshold}: {demo.full_windows_shrink}")
    odd_final = abs(complex(demo.odd.final))
    print(f"  odd-only partial sum at 10^6: {odd_final:.2f}")
    print(f"  fitted growth exponent: {demo.odd_verdict.growth_exponent:.3f} "
          f"(the main term predicts 1 - s = {1 - s:.1f})")
    print(f"  odd-series verdict: {demo.odd_verdict.outcome}\n")


if __name__ == "__main__":
    show_densities()
    show_weighted_sums()
    show_counterexample()
    print("Done.")
