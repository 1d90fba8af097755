#!/usr/bin/env python3
"""Three routes to the same integer: the Ramanujan sum c_q(a).

The root-of-unity definition, the divisor-sum form, and the closed form
mu(q/(q,a)) * phi(q) / phi(q/(q,a)) all agree, term for term.  On prime
powers the values collapse to phi(p^K), one negative spike -p^v, then
zeros, so each "prime-power column" sums to exactly zero: the cancellation
that every expansion of the zero function ultimately rests on.
"""

from ramanujan_cloud import (
    c_direct,
    c_holder,
    c_kluyver,
    c_prime_power,
    prime_power_column_sum,
    valuation,
)


def show_formula_agreement(bound: int = 120) -> None:
    print(f"--- Formula agreement for all 1 <= q, a <= {bound} ---")
    mismatches = 0
    for q in range(1, bound + 1):
        for a in range(1, bound + 1):
            d, k, h = c_direct(q, a), c_kluyver(q, a), c_holder(q, a)
            if not d == k == h:
                mismatches += 1
                print(f"  MISMATCH at q={q}, a={a}: {d} / {k} / {h}")
    print(f"  checked {bound * bound} pairs, {mismatches} mismatches\n")

    print("  sample values (q down, a across):")
    header = "  q\\a " + "".join(f"{a:>6}" for a in range(1, 13))
    print(header)
    for q in (1, 2, 3, 4, 6, 9, 12):
        row = "".join(f"{c_holder(q, a):>6}" for a in range(1, 13))
        print(f"  {q:>3} {row}")
    print()


def show_prime_power_profile(p: int = 3, a: int = 18) -> None:
    v = valuation(p, a)
    print(f"--- c at powers of p = {p} with a = {a} (v_p(a) = {v}) ---")
    for K in range(v + 3):
        c = c_prime_power(p, K, a)
        note = "phi(p^K)" if K <= v else ("-p^v" if K == v + 1 else "zero from here on")
        print(f"  K = {K}: c_{{{p}^{K}}}({a}) = {c:>4}   ({note})")
    col = prime_power_column_sum(p, a)
    print(f"  column sum over K = 0..{v + 1}: {col}\n")


def show_columns_cancel(prime_bound: int = 20, a_bound: int = 60) -> None:
    print(f"--- Column cancellation for p <= {prime_bound}, a <= {a_bound} ---")
    bad = 0
    for p in (2, 3, 5, 7, 11, 13, 17, 19):
        for a in range(1, a_bound + 1):
            if prime_power_column_sum(p, a) != 0:
                bad += 1
    print(f"  {8 * a_bound} columns checked, {bad} nonzero\n")


if __name__ == "__main__":
    show_formula_agreement()
    show_prime_power_profile()
    show_columns_cancel()
    print("Done.")
