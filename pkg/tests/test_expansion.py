"""Expansion engine: exact truncated sums against a from-scratch oracle,
the finite/cofinite factorizations, peel identities, convergence verdicts,
and the zero-cloud decision procedure."""

import cmath
import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramanujan_cloud import (
    EngineConfig,
    MultiplicativeFunction,
    PartialSumSeries,
    ResourceLimitError,
    absolute_convergence_report,
    catalog,
    checkpoint_schedule,
    coprime_peel_identity,
    detect_convergence,
    expansion_partial_sums,
    factorize,
    factorized_expansion,
    finite_factor,
    finite_factor_forms_equal,
    finite_factor_star,
    mobius,
    restricted_mobius_partial_sums,
    zero_cloud_verdict,
)

FAST_CFG = EngineConfig(Q=20_000, sample_a=tuple(range(1, 9)))


def oracle_c(q: int, a: int) -> int:
    z = sum(cmath.exp(2j * cmath.pi * a * h / q) for h in range(1, q + 1) if gcd(h, q) == 1)
    assert abs(z.imag) < 1e-7
    return round(z.real)


def oracle_expansion(G, a: int, Q: int):
    return sum(G.eval(q) * oracle_c(q, a) for q in range(1, Q + 1))


def oracle_restricted(G, b: int, x: int):
    return sum(G.eval(r) * mobius(r) for r in range(1, x + 1) if gcd(r, b) == 1)


def normal_inverse_squares() -> MultiplicativeFunction:
    # Completely multiplicative 1/q^2: its Mobius series converges fast to
    # a nonzero limit, so it is decisively outside the zero cloud.
    return MultiplicativeFunction(
        "inverse_squares",
        rule=lambda p, e: Fraction(1, p ** (2 * e)),
        exact=True,
        declared_transparent=frozenset(),
        declared_invisible=frozenset(),
    )


def exotic_inverse_squares_off3() -> MultiplicativeFunction:
    return MultiplicativeFunction(
        "invisible3_inverse_squares",
        rule=lambda p, e: 1 if p == 3 else Fraction(1, p ** (2 * e)),
        exact=True,
        declared_transparent=frozenset({3}),
        declared_invisible=frozenset({3}),
    )


class TestCheckpointSchedule:
    def test_small_is_every_integer(self):
        assert checkpoint_schedule(10) == list(range(1, 11))

    def test_large_shape(self):
        cps = checkpoint_schedule(10**6)
        assert cps == sorted(set(cps))
        assert cps[-1] == 10**6
        assert 100 in cps and 10**5 in cps
        assert sum(1 for x in cps if x >= 5 * 10**5) >= 32

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            checkpoint_schedule(0)


class TestExpansionSums:
    def test_single_term(self):
        for G in (catalog("GR"), catalog("GH")):
            assert expansion_partial_sums(G, 1, 1, checkpoints=[1], exact=True).final == 1

    def test_classical_truncation_exact_value(self):
        # Frozen from the direct enumeration oracle below.
        series = expansion_partial_sums(catalog("GR"), 1, 10, checkpoints=list(range(1, 11)), exact=True)
        assert series.final == Fraction(19, 210)
        assert series.final == oracle_expansion(catalog("GR"), 1, 10)
        assert series.mode == "exact-rational"

    def test_indicator_cancels_immediately(self):
        G2 = catalog("indicator_prime_powers", p0=2)
        series = expansion_partial_sums(G2, 1, 4, checkpoints=[1, 2, 3, 4], exact=True)
        assert series.values() == [1, 0, 0, 0]

    @pytest.mark.parametrize("a,Q", [(1, 30), (6, 50), (12, 40), (30, 25)])
    def test_against_oracle(self, a, Q):
        for G in (catalog("GR"), catalog("GH"), catalog("G0", p0=2)):
            got = expansion_partial_sums(G, a, Q, checkpoints=[Q], exact=True).final
            assert got == oracle_expansion(G, a, Q)

    def test_checkpoint_increments_are_term_sums(self):
        G = catalog("GH")
        series = expansion_partial_sums(G, 6, 40, checkpoints=[5, 17, 40], exact=True)
        (x0, s0), (x1, s1), (x2, s2) = series.checkpoints
        assert s1 - s0 == sum(G.eval(q) * oracle_c(q, 6) for q in range(x0 + 1, x1 + 1))
        assert s2 - s1 == sum(G.eval(q) * oracle_c(q, 6) for q in range(x1 + 1, x2 + 1))

    def test_float_path_tracks_exact_path(self):
        for a in (1, 6, 97):
            se = expansion_partial_sums(catalog("GR"), a, 3000, checkpoints=[3000], exact=True)
            sf = expansion_partial_sums(catalog("GR"), a, 3000, checkpoints=[3000], exact=False)
            assert sf.final == pytest.approx(float(se.final), abs=1e-11)
            assert sf.mode == "floating"

    def test_coprime_restriction(self):
        G = catalog("GR")
        got = expansion_partial_sums(G, 6, 50, checkpoints=[50], coprime_to=2, exact=True).final
        want = sum(G.eval(q) * oracle_c(q, 6) for q in range(1, 51) if q % 2 == 1)
        assert got == want

    def test_absolute_mode(self):
        G = catalog("GR")
        got = expansion_partial_sums(G, 6, 50, checkpoints=[50], absolute=True, exact=True).final
        want = sum(abs(G.eval(q) * oracle_c(q, 6)) for q in range(1, 51))
        assert got == want

    def test_exact_mode_guards(self):
        with pytest.raises(ValueError):
            expansion_partial_sums(catalog("lemma7_h", s=0.6), 1, 10, exact=True)
        with pytest.raises(ResourceLimitError):
            expansion_partial_sums(catalog("GR"), 1, 100_000, exact=True)

    def test_checkpoint_validation(self):
        with pytest.raises(ValueError):
            expansion_partial_sums(catalog("GR"), 1, 10, checkpoints=[5, 3])
        with pytest.raises(ValueError):
            expansion_partial_sums(catalog("GR"), 1, 10, checkpoints=[0, 3])


class TestRestrictedMobius:
    def test_frozen_value(self):
        series = restricted_mobius_partial_sums(catalog("GR"), 1, 10, checkpoints=[10], exact=True)
        assert series.final == Fraction(19, 210)
        assert series.final == oracle_restricted(catalog("GR"), 1, 10)

    def test_only_radical_matters(self):
        for G in (catalog("GR"), catalog("GH")):
            a = restricted_mobius_partial_sums(G, 12, 200, checkpoints=list(range(1, 201)), exact=True)
            b = restricted_mobius_partial_sums(G, 6, 200, checkpoints=list(range(1, 201)), exact=True)
            assert a.checkpoints == b.checkpoints

    def test_indicator_support_collapses(self):
        G2 = catalog("indicator_prime_powers", p0=2)
        series = restricted_mobius_partial_sums(G2, 2, 100, checkpoints=[100], exact=True)
        assert series.final == 1

    @pytest.mark.parametrize("b,x", [(1, 40), (6, 60), (30, 45)])
    def test_against_oracle(self, b, x):
        for G in (catalog("GR"), catalog("GH")):
            got = restricted_mobius_partial_sums(G, b, x, checkpoints=[x], exact=True).final
            assert got == oracle_restricted(G, b, x)


class TestFiniteFactors:
    def test_empty_product(self):
        for G in (catalog("GR"), catalog("GH"), catalog("indicator_prime_powers", p0=2)):
            assert finite_factor(G, 1) == 1

    def test_hardy_at_two(self):
        assert finite_factor(catalog("GH"), 2) == 1

    def test_indicator_vanishes(self):
        assert finite_factor(catalog("indicator_prime_powers", p0=2), 2) == 0

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_classical_at_primes(self, p):
        # 1 + (p-1)/p - 1/p = 2 - 2/p, from the term-by-term oracle.
        assert finite_factor(catalog("GR"), p) == 2 - Fraction(2, p)

    def test_term_by_term_oracle(self):
        for G in (catalog("GR"), catalog("GH"), catalog("G0", p0=2)):
            for a in (2, 12, 90):
                expected = 1
                for p in sorted({p for p, _ in factorize(a).factors}):
                    v = 0
                    m = a
                    while m % p == 0:
                        m //= p
                        v += 1
                    expected *= sum(G.eval(p**K) * oracle_c(p**K, a) for K in range(v + 2))
                assert finite_factor(G, a) == expected

    def test_star_values(self):
        assert finite_factor_star(catalog("GR")) == 1
        assert finite_factor_star(catalog("GH")) == 1  # 2 * (1 - 1/2)

    def test_star_rejects_exotic(self):
        with pytest.raises(ValueError):
            finite_factor_star(catalog("indicator_prime_powers", p0=2))

    def test_star_never_vanishes_for_sporadic(self):
        # Sporadic instance: transparent at 2 with v = 2.
        G = MultiplicativeFunction(
            "sporadic_depth2",
            rule=lambda p, e: (1 if e <= 2 else Fraction(1, 2)) if p == 2 else Fraction(1, p**e),
            exact=True,
            declared_transparent=frozenset({2}),
            declared_invisible=frozenset(),
        )
        star = finite_factor_star(G)
        assert star == 4 * (1 - Fraction(1, 2)) == 2

    def test_abel_forms_on_catalog(self):
        assert finite_factor_forms_equal(catalog("GH"), 2)
        assert finite_factor_forms_equal(catalog("GR"), 12)

    @given(st.integers(min_value=1, max_value=500), st.integers(min_value=0, max_value=2**31 - 1))
    @settings(max_examples=120, deadline=None)
    def test_abel_forms_random_rules(self, a, seed):
        rng = random.Random(seed)
        memo = {}

        def rule(p, e):
            if (p, e) not in memo:
                memo[(p, e)] = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
            return memo[(p, e)]

        G = MultiplicativeFunction("random", rule=rule, exact=True)
        assert finite_factor_forms_equal(G, a)

    def test_factorized_expansion_zero(self):
        assert factorized_expansion(catalog("indicator_prime_powers", p0=2), 2, 100, exact=True) == 0

    def test_factorized_expansion_trivial_factor(self):
        G = catalog("GR")
        got = factorized_expansion(G, 1, 200, exact=True)
        want = restricted_mobius_partial_sums(G, 1, 200, checkpoints=[200], exact=True).final
        assert got == want

    def test_factorized_expansion_within_tail_bound(self):
        # For absolutely convergent entries, the product form tracks direct
        # summation within the computable absolute tail bound.
        for G in (catalog("indicator_prime_powers", p0=2), exotic_inverse_squares_off3()):
            for a in (2, 6, 12):
                Q = 2000
                direct = float(expansion_partial_sums(G, a, Q, checkpoints=[Q], exact=True).final)
                product = float(factorized_expansion(G, a, Q, exact=True))
                rep = absolute_convergence_report(G, 1000, a, Q)
                assert abs(direct - product) <= rep.factor_tail_bound + 1e-9


class TestPeelIdentity:
    def test_classical_cases(self):
        lhs, rhs = coprime_peel_identity(catalog("GR"), {3}, 2, 20, exact=True)
        assert lhs == rhs
        lhs, rhs = coprime_peel_identity(catalog("GH"), set(), 2, 50, exact=True)
        assert lhs == rhs

    def test_empty_peel_below_p1(self):
        # x < p1: the scaled term is an empty sum, both sides collapse.
        G = catalog("GR")
        lhs, rhs = coprime_peel_identity(G, {3}, 11, 10, exact=True)
        assert lhs == rhs
        assert rhs == restricted_mobius_partial_sums(G, 33, 10, checkpoints=[10], exact=True).final

    def test_input_validation(self):
        with pytest.raises(ValueError):
            coprime_peel_identity(catalog("GR"), {3}, 3, 10)
        with pytest.raises(ValueError):
            coprime_peel_identity(catalog("GR"), {4}, 3, 10)
        with pytest.raises(ValueError):
            coprime_peel_identity(catalog("GR"), {3}, 4, 10)

    @pytest.mark.parametrize("F", [set(), {2}, {3, 5}, {2, 3, 5, 7}])
    @pytest.mark.parametrize("p1", [2, 3, 11, 13])
    def test_grid(self, F, p1):
        if p1 in F:
            pytest.skip("p1 inside F")
        for G in (catalog("GR"), catalog("G0", p0=2)):
            for x in (1, 13, 100, 333):
                lhs, rhs = coprime_peel_identity(G, F, p1, x, exact=True)
                assert lhs == rhs


class TestDetectConvergence:
    def test_constant_zero(self):
        series = PartialSumSeries("zeros", tuple((x, 0.0) for x in range(1, 41)), "floating")
        verdict = detect_convergence(series, window=32, tol=0.01)
        assert verdict.outcome == "converges_to" and verdict.limit == 0

    def test_linear_growth_diverges(self):
        cps = checkpoint_schedule(10**6)
        series = PartialSumSeries("ones", tuple((x, float(x)) for x in cps), "floating")
        verdict = detect_convergence(series, window=32, tol=0.01)
        assert verdict.outcome == "diverges_to_infinity"
        assert verdict.growth_exponent == pytest.approx(1.0, abs=0.01)

    def test_oscillation_is_inconclusive(self):
        series = PartialSumSeries(
            "flip", tuple((x, float((-1) ** x)) for x in range(1, 41)), "floating"
        )
        verdict = detect_convergence(series, window=32, tol=0.01)
        assert verdict.outcome == "inconclusive"

    def test_target_mismatch(self):
        series = PartialSumSeries("ones", tuple((x, 1.0) for x in range(1, 41)), "floating")
        assert detect_convergence(series, target=0, window=32, tol=0.01).outcome == "inconclusive"
        got = detect_convergence(series, window=32, tol=0.01)
        assert got.outcome == "converges_to" and got.limit == pytest.approx(1.0)

    def test_needs_enough_checkpoints(self):
        series = PartialSumSeries("short", ((1, 0.0), (2, 0.0)), "floating")
        with pytest.raises(ValueError):
            detect_convergence(series, window=32)


class TestAbsoluteConvergenceReport:
    def test_indicator_is_positive(self):
        rep = absolute_convergence_report(catalog("indicator_prime_powers", p0=2), 10_000, 6, 10_000)
        assert rep.prime_abs_series.final == 1.0  # only p = 2 contributes
        assert rep.prime_abs_verdict == "bounded"
        assert rep.verdict == "positive"
        assert rep.factor_discrepancy <= rep.factor_tail_bound + 1e-9

    def test_classical_is_negative(self):
        rep = absolute_convergence_report(catalog("GR"), 10_000, 1, 2000)
        assert rep.prime_abs_verdict == "diverging"
        assert rep.verdict == "negative"

    def test_pointwise_but_not_absolute(self):
        rep = absolute_convergence_report(catalog("G0", p0=2), 10_000, 3, 2000)
        assert rep.prime_abs_verdict == "diverging"
        assert rep.verdict == "negative"


class TestZeroCloudVerdict:
    def test_classical_members(self):
        for name, expected in (("GR", "normal"), ("GH", "sporadic")):
            verdict = zero_cloud_verdict(catalog(name), FAST_CFG)
            assert verdict.classification == expected
            assert verdict.conclusion == "in_zero_cloud"
            assert all(status == "pass" for _, status in verdict.hypothesis_checks)

    def test_exotic_member(self):
        verdict = zero_cloud_verdict(catalog("indicator_prime_powers", p0=2), FAST_CFG)
        assert verdict.classification == "exotic"
        assert verdict.conclusion == "in_zero_cloud"

    def test_weakly_exotic_member(self):
        verdict = zero_cloud_verdict(catalog("weakly_exotic_sample"), FAST_CFG)
        assert verdict.classification == "weakly_exotic"
        assert verdict.conclusion == "in_zero_cloud"

    def test_nonzero_limit_is_excluded(self):
        verdict = zero_cloud_verdict(normal_inverse_squares(), FAST_CFG)
        assert verdict.classification == "normal"
        assert verdict.conclusion == "not_in_zero_cloud"

    def test_uncertified_is_inconclusive(self):
        plain = MultiplicativeFunction(
            "plain_inverse_squares", rule=lambda p, e: Fraction(1, p ** (2 * e)), exact=True
        )
        verdict = zero_cloud_verdict(plain, FAST_CFG)
        assert verdict.conclusion == "inconclusive"
        assert ("spectra certified by the constructor", "fail") in verdict.hypothesis_checks

    def test_divergent_hypothesis_is_inconclusive(self):
        verdict = zero_cloud_verdict(catalog("prop5"), FAST_CFG)
        assert verdict.classification == "normal"
        assert verdict.conclusion == "inconclusive"
        assert any(status == "fail" for _, status in verdict.hypothesis_checks)

    def test_missing_invisible_prime(self):
        from ramanujan_cloud import GeneralArithmeticFunction

        g = GeneralArithmeticFunction("anon", fn=lambda n: 0)
        verdict = zero_cloud_verdict(g, FAST_CFG)
        assert verdict.conclusion == "inconclusive"
        assert verdict.hypothesis_checks[0][1] == "fail"

    def test_dispatch_matches_classification(self):
        # The verdict path is chosen by the spectrum classification, for
        # every catalog entry (the general entry reads as weakly exotic).
        from ramanujan_cloud import spectrum

        entries = [
            catalog("GR"),
            catalog("GH"),
            catalog("indicator_prime_powers", p0=2),
            catalog("G0", p0=2),
            catalog("prop1"),
            catalog("lemma7_h", s=0.6),
            catalog("prop5"),
        ]
        for G in entries:
            assert zero_cloud_verdict(G, FAST_CFG).classification == spectrum(G).classification
        assert zero_cloud_verdict(catalog("weakly_exotic_sample"), FAST_CFG).classification == "weakly_exotic"
