#!/usr/bin/env python3
"""The finite/cofinite split of an expansion.

Grouping terms q = d * r by the part d supported on the primes dividing a
factors the whole series into a *finite* Euler-type product over p | a and
a *cofinite* Mobius series over r coprime to a.  The finite factor is a
short sum per prime; Abel summation rewrites it as
sum p^K (G(p^K) - G(p^(K+1))), which collapses to a_G (1 - G(p^(v+1))).
Adding one prime at a time to the coprimality condition is the "peel":
S_F(x) = S_{F+p1}(x) - G(p1) S_{F+p1}(x / p1), exactly, at every x.
"""

from fractions import Fraction
import random

from ramanujan_cloud import (
    MultiplicativeFunction,
    catalog,
    coprime_peel_identity,
    expansion_partial_sums,
    factorized_expansion,
    finite_factor,
    finite_factor_forms_equal,
    finite_factor_star,
)


def show_finite_factors() -> None:
    print("--- Finite factors and their Abel-summed collapse ---")
    for name, G in [("GR", catalog("GR")), ("GH", catalog("GH"))]:
        for a in (2, 6, 12):
            print(f"  {name}, a = {a:>2}: finite factor = {finite_factor(G, a)}")
        star = finite_factor_star(G)
        print(f"  {name}: a_G * prod(1 - G(p^(v+1))) over transparent p = {star}")
    print()


def show_abel_forms() -> None:
    print("--- Abel-summed equality on random exact rules ---")
    rng = random.Random(7)
    ok = 0
    for _ in range(200):
        memo = {}

        def rule(p, e):
            if (p, e) not in memo:
                memo[(p, e)] = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
            return memo[(p, e)]

        G = MultiplicativeFunction("random", rule=rule, exact=True)
        ok += finite_factor_forms_equal(G, rng.randint(1, 500))
    print(f"  200 random rules, equality held {ok} times\n")


def show_product_vs_direct() -> None:
    print("--- Product form vs direct summation (absolutely convergent entry) ---")
    G = MultiplicativeFunction(
        "invisible3_inverse_squares",
        rule=lambda p, e: 1 if p == 3 else Fraction(1, p ** (2 * e)),
        exact=True,
        declared_transparent=frozenset({3}),
        declared_invisible=frozenset({3}),
    )
    for a in (2, 6, 9):
        x = 3000
        direct = float(expansion_partial_sums(G, a, x, checkpoints=[x], exact=True).final)
        product = float(factorized_expansion(G, a, x, exact=True))
        print(f"  a = {a}: direct = {direct:+.10f}, finite x cofinite = {product:+.10f}, "
              f"gap = {abs(direct - product):.2e}")
    print()


def show_peel() -> None:
    print("--- Peeling one prime off the coprimality condition ---")
    G = catalog("GR")
    for F, p1, x in [(set(), 2, 500), ({3}, 2, 500), ({2, 5}, 7, 1000)]:
        lhs, rhs = coprime_peel_identity(G, F, p1, x, exact=True)
        print(f"  F = {sorted(F) or '{}'}, p1 = {p1}, x = {x}: "
              f"both sides = {float(lhs):+.10f}, exactly equal = {lhs == rhs}")
    print()


if __name__ == "__main__":
    show_finite_factors()
    show_abel_forms()
    show_product_vs_direct()
    show_peel()
    print("Done.")
