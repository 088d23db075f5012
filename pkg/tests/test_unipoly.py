"""Ascending-coefficient univariate polynomial helpers."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flatbands import unipoly

F = Fraction


def test_normalize_trims_leading_zeros():
    assert unipoly.normalize([1, 2, 0, 0]) == (F(1), F(2))
    assert unipoly.normalize([0, 0]) == ()
    assert unipoly.degree(()) == -1
    assert unipoly.degree((F(1), F(1))) == 1


def test_arithmetic():
    p = unipoly.normalize([1, 1])       # 1 + x
    q = unipoly.normalize([-1, 1])      # -1 + x
    assert unipoly.add(p, q) == (F(0), F(2))
    assert unipoly.sub(p, p) == ()
    assert unipoly.mul(p, q) == (F(-1), F(0), F(1))
    assert unipoly.mul(p, ()) == ()
    assert unipoly.evaluate((F(-1), F(0), F(1)), 3) == 8
    assert unipoly.scale(p, F(1, 2)) == (F(1, 2), F(1, 2))


def test_monic():
    assert unipoly.monic((F(2), F(4))) == (F(1, 2), F(1))
    with pytest.raises(ValueError):
        unipoly.monic(())


def test_divmod_exact():
    # x^3 - 1 = (x - 1)(x^2 + x + 1)
    p = unipoly.normalize([-1, 0, 0, 1])
    q = unipoly.normalize([-1, 1])
    quot, rem = unipoly.divmod_exact(p, q)
    assert quot == (F(1), F(1), F(1))
    assert rem == ()
    quot, rem = unipoly.divmod_exact((F(1), F(1)), (F(0), F(0), F(1)))
    assert quot == ()
    assert rem == (F(1), F(1))
    with pytest.raises(ZeroDivisionError):
        unipoly.divmod_exact(p, ())


def test_synthetic_divide():
    p = unipoly.normalize([-6, 11, -6, 1])  # (x-1)(x-2)(x-3)
    quot, rem = unipoly.synthetic_divide(p, 2)
    assert rem == 0
    assert quot == (F(3), F(-4), F(1))
    _, rem = unipoly.synthetic_divide(p, 5)
    assert rem == unipoly.evaluate(p, 5)


def test_gcd_frozen_cases():
    # gcd(x^2 - 1, x^3 - 1) = x - 1
    assert unipoly.gcd((-1, 0, 1), (-1, 0, 0, 1)) == (F(-1), F(1))
    # coprime pair
    assert unipoly.gcd((-1, 1), (1, 1)) == (F(1),)
    assert unipoly.gcd((), ()) == ()
    assert unipoly.gcd((), (2, 2)) == (F(1), F(1))
    assert unipoly.gcd((F(5),), (1, 1)) == (F(1),)


def test_sqrt_rational():
    assert unipoly.sqrt_rational(F(9, 4)) == F(3, 2)
    assert unipoly.sqrt_rational(F(2)) is None
    assert unipoly.sqrt_rational(F(-4)) is None
    assert unipoly.sqrt_rational(F(0)) == 0


def test_factor_linear_and_quadratic():
    roots, others = unipoly.factor_rational((F(-3), F(1)))
    assert roots == [(F(3), 1)] and others == []
    # x^2 - 5x + 6
    roots, others = unipoly.factor_rational((6, -5, 1))
    assert roots == [(F(2), 1), (F(3), 1)] and others == []
    # double root: (x - 1/2)^2 scaled
    roots, others = unipoly.factor_rational((F(1), F(-4), F(4)))
    assert roots == [(F(1, 2), 2)] and others == []
    # x^2 - 2 is irreducible over Q
    roots, others = unipoly.factor_rational((-2, 0, 1))
    assert roots == []
    assert others == [((F(-2), F(0), F(1)), 1)]
    # x^2 + 1 has no rational (or real) roots
    roots, others = unipoly.factor_rational((1, 0, 1))
    assert roots == []
    assert others == [((F(1), F(0), F(1)), 1)]


def test_factor_cubic_uses_exact_backend():
    # (x - 1)(x^2 - 2)
    p = unipoly.mul((-1, 1), (-2, 0, 1))
    roots, others = unipoly.factor_rational(p)
    assert roots == [(F(1), 1)]
    assert others == [((F(-2), F(0), F(1)), 1)]


def test_factor_quartic_with_multiplicity():
    # x^2 (x - 2)^2
    p = unipoly.mul(unipoly.mul((0, 1), (0, 1)), unipoly.mul((-2, 1), (-2, 1)))
    roots, others = unipoly.factor_rational(p)
    assert roots == [(F(0), 2), (F(2), 2)]
    assert others == []


def test_factor_rejects_zero():
    with pytest.raises(ValueError):
        unipoly.factor_rational(())


coeff = st.fractions(min_value=-8, max_value=8, max_denominator=6)
poly = st.lists(coeff, max_size=5).map(unipoly.normalize)


@given(p=poly, root=coeff)
@settings(max_examples=80, deadline=None)
def test_synthetic_divide_reconstructs(p, root):
    quot, rem = unipoly.synthetic_divide(p, root)
    rebuilt = unipoly.add(unipoly.mul(quot, (-root, F(1))), (rem,) if rem else ())
    assert rebuilt == p


@given(p=poly, q=poly)
@settings(max_examples=80, deadline=None)
def test_divmod_identity(p, q):
    if not q:
        return
    quot, rem = unipoly.divmod_exact(p, q)
    assert unipoly.add(unipoly.mul(quot, q), rem) == p
    assert unipoly.degree(rem) < unipoly.degree(q)


@given(p=poly, q=poly, common=poly)
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both_and_sees_common_factor(p, q, common):
    g = unipoly.gcd(p, q)
    for side in (p, q):
        if side and g:
            _, rem = unipoly.divmod_exact(side, g)
            assert rem == ()
    if unipoly.degree(common) >= 1 and p and q:
        lifted = unipoly.gcd(unipoly.mul(p, common), unipoly.mul(q, common))
        _, rem = unipoly.divmod_exact(lifted, unipoly.monic(common))
        assert rem == ()
