"""Sawtooth/fractional-part primitives and the zeta evaluation layer."""

import math
import random
from fractions import Fraction

import pytest
from mpmath import mp

from seifinv.numkernel import (
    BigFloat,
    frac,
    hurwitz_zeta,
    periodic_dirichlet_split,
    psi2,
    riemann_zeta,
    sawtooth,
    sawtooth_pq,
    signed_periodic_split,
)


def test_frac_examples():
    assert frac(Fraction(-4, 3)) == Fraction(2, 3)
    assert frac(Fraction(5, 2)) == Fraction(1, 2)
    assert frac(-2) == 0


def test_sawtooth_examples():
    assert sawtooth(7) == 0
    assert sawtooth(Fraction(1, 2)) == 0
    assert sawtooth(Fraction(1, 3)) == Fraction(-1, 6)


def test_psi2_examples():
    assert psi2(0) == Fraction(1, 6)
    assert psi2(Fraction(1, 2)) == Fraction(-1, 12)
    assert psi2(Fraction(7, 3)) == Fraction(-1, 18)


def test_sawtooth_properties():
    rng = random.Random(3)
    for _ in range(300):
        den = rng.randint(1, 40)
        x = Fraction(rng.randint(-50, 50), den)
        assert sawtooth(-x) == -sawtooth(x)
        assert sawtooth(x + 1) == sawtooth(x)
        assert 0 <= frac(x) < 1
        assert (x - frac(x)).denominator == 1
        assert sawtooth_pq(x.numerator * 3, x.denominator * 3) == sawtooth(x)


def test_hurwitz_closed_forms_at_special_points():
    rng = random.Random(5)
    for _ in range(50):
        a = Fraction(rng.randint(1, 24), 24)
        z0 = hurwitz_zeta(0, a, 30)
        z1 = hurwitz_zeta(-1, a, 30)
        with mp.workdps(45):
            want0 = mp.mpf((Fraction(1, 2) - a).numerator) / (Fraction(1, 2) - a).denominator
            e1 = Fraction(-1, 12) + a * (1 - a) / 2
            want1 = mp.mpf(e1.numerator) / e1.denominator
            assert abs(z0.value - want0) < mp.mpf(10) ** -28
            assert abs(z1.value - want1) < mp.mpf(10) ** -28


@pytest.mark.parametrize("s", [Fraction(1, 2), 2, 3, Fraction(-1, 2), Fraction(5, 2)])
@pytest.mark.parametrize("a", [Fraction(1, 4), Fraction(1, 2), Fraction(2, 3), 1])
def test_hurwitz_against_mpmath(s, a):
    # mpmath's zeta implements an independent algorithm
    got = hurwitz_zeta(s, a, 30)
    with mp.workdps(50):
        want = mp.zeta(mp.mpf(s.numerator) / s.denominator if isinstance(s, Fraction) else s,
                       mp.mpf(a.numerator) / a.denominator if isinstance(a, Fraction) else a)
        assert abs(got.value - want) < mp.mpf(10) ** -28


def test_hurwitz_guards():
    with pytest.raises(ValueError):
        hurwitz_zeta(2, 0, 30)
    with pytest.raises(ValueError):
        hurwitz_zeta(2, Fraction(-1, 3), 30)
    with pytest.raises(ValueError):
        hurwitz_zeta(1 + 1e-35, 1, 30)


def test_riemann_values():
    assert abs(float(riemann_zeta(-1, 30).value) - (-1 / 12)) < 1e-25
    assert abs(float(riemann_zeta(0, 30).value) - (-1 / 2)) < 1e-25
    z2 = riemann_zeta(2, 30)
    with mp.workdps(45):
        assert abs(z2.value - mp.pi**2 / 6) < mp.mpf(10) ** -28


def test_periodic_split_identity_case():
    got = periodic_dirichlet_split([1], 2, 30)
    with mp.workdps(45):
        assert abs(got.value - mp.pi**2 / 6) < mp.mpf(10) ** -27


def test_periodic_split_odd_n_only():
    # sum over odd n of 1/n^2 = (1 - 1/4) zeta(2) = pi^2/8
    got = periodic_dirichlet_split([1, 0], 2, 30)
    with mp.workdps(45):
        assert abs(got.value - mp.pi**2 / 8) < mp.mpf(10) ** -27


def test_periodic_split_alternating():
    # sum (-1)^(n+1)/n^2 = pi^2/12
    got = periodic_dirichlet_split([1, -1], 2, 30)
    with mp.workdps(45):
        assert abs(got.value - mp.pi**2 / 12) < mp.mpf(10) ** -27


def test_periodic_split_matches_partial_sum_at_s3():
    rng = random.Random(17)
    table = [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(5)]
    got = periodic_dirichlet_split(table, 3, 30)
    n_terms = 10**6
    vals = [float(t) for t in table]
    partial = math.fsum(vals[(n - 1) % 5] / n**3 for n in range(1, n_terms + 1))
    # tail bound: max|f| * sum_{n>N} n^-3 < max|f| / (2 N^2)
    bound = max(abs(v) for v in vals) / (2 * n_terms**2) + 1e-12
    assert abs(float(got.value) - partial) < bound


def test_signed_split_zero_function():
    assert abs(float(signed_periodic_split([0, 0, 0], Fraction(1, 3), 2, 30).value)) == 0


def test_signed_split_half_symmetry():
    got = signed_periodic_split([1], Fraction(1, 2), 0, 30)
    assert abs(float(got.value)) < 1e-28


def test_signed_split_quarter():
    # zeta(0, rho) - zeta(0, 1 - rho) = 1 - 2 rho
    got = signed_periodic_split([1], Fraction(1, 4), 0, 30)
    assert abs(float(got.value) - 0.5) < 1e-28


def test_signed_split_rejects_bad_rho():
    with pytest.raises(ValueError):
        signed_periodic_split([1], Fraction(3, 2), 2, 30)
    with pytest.raises(ValueError):
        signed_periodic_split([1], 0, 2, 30)


def test_doubling_precision_keeps_leading_digits():
    lo = hurwitz_zeta(Fraction(5, 2), Fraction(1, 3), 30)
    hi = hurwitz_zeta(Fraction(5, 2), Fraction(1, 3), 60)
    with mp.workdps(80):
        assert abs(lo.value - hi.value) < mp.mpf(10) ** -28
    # and the 60-digit value is genuinely tighter
    with mp.workdps(90):
        ref = mp.zeta(mp.mpf(5) / 2, mp.mpf(1) / 3)
        assert abs(hi.value - ref) < mp.mpf(10) ** -58


def test_bigfloat_serialization_carries_precision_tag():
    z = riemann_zeta(2, 30)
    text = str(z)
    assert text.endswith("@30")
    assert text.startswith("1.644934")
    assert isinstance(z, BigFloat)
    assert float(z.eps) < 1e-28
