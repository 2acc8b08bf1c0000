"""Localization pushforwards, primitive components, Segre cross-checks."""

import random
from fractions import Fraction

import pytest
from sympy import Symbol, expand, symbols

from sysbound.catalog import projective_space
from sysbound.characteristic import ChernData
from sysbound.errors import PreconditionUnmet, TooFewVariables
from sysbound.pushforward import (SEGRE_SIGN, bracket_formula,
                                  localization_pushforward,
                                  power_sum_expansion, primitive_coefficient,
                                  segre_pushforward, segre_series_at)


def test_base_case_minus_p1():
    sym = localization_pushforward(1, 2, 1)
    x1, x2 = symbols("x1 x2")
    assert expand(sym.as_expr() + x1 + x2) == 0
    assert sym.is_symmetric()


def test_degree_zero_is_fiber_degree():
    # pushforward of the top fiber power is the degree of the fiber
    # Grassmannian: 1 for projective fibers, 2 for G(2,4), 5 for G(2,5)
    assert localization_pushforward(1, 2, 0).as_expr() == 1
    assert localization_pushforward(1, 4, 0).as_expr() == 1
    assert localization_pushforward(3, 4, 0).as_expr() == 1
    assert localization_pushforward(2, 4, 0).as_expr() == 2
    assert localization_pushforward(2, 5, 0).as_expr() == 5


def test_polynomiality_sweep():
    for r in range(2, 6):
        for k in range(1, r):
            for j in range(0, 5):
                sym = localization_pushforward(k, r, j)
                if j == 0:
                    assert sym.poly.is_zero or sym.poly.total_degree() == 0
                else:
                    assert sym.poly.total_degree() == j
                assert sym.is_symmetric()


def test_complete_homogeneous_identity_for_projective_fibers():
    # P^(1,r)_b = (-1)^b h_b: check against an independent generating-series
    # oracle at rational sample points
    rng = random.Random(17)
    for r in (2, 3, 4, 5):
        for b in (1, 2, 3):
            sym = localization_pushforward(1, r, b)
            for _ in range(3):
                vals = [Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                        for _ in range(r)]
                lhs = sym.evaluate(vals)
                rhs = SEGRE_SIGN * segre_series_at(vals, b)
                assert lhs == rhs


def test_primitive_coefficient_examples():
    assert primitive_coefficient(1, 2, 1) == -1
    assert primitive_coefficient(1, 3, 1) == -1
    assert primitive_coefficient(2, 3, 1) == -2
    assert primitive_coefficient(1, 2, 2) == Fraction(1, 2)


def test_primitive_coefficient_tracks_bracket_for_b_at_least_two():
    # [P]_prim = C * bracket with C nonzero, computed not assumed
    for (k, r) in ((1, 3), (2, 3), (1, 4), (2, 5)):
        for b in range(2, min(r, 4) + 1):
            prim = primitive_coefficient(k, r, b)
            bracket = bracket_formula(k, r, b)
            assert bracket != 0
            assert prim != 0
            assert (prim / bracket) != 0


def test_primitive_vanishing_locus_at_r_equals_2k():
    """At r = 2k the bracket (and the coefficient) vanish for odd b >= 3.

    Even b always survive; b = 1 survives too (the class is a nonzero
    multiple of p_1 even though the closed-form bracket degenerates there).
    """
    for k in (1, 2, 3):
        r = 2 * k
        for b in range(1, min(6, r) + 1):
            prim = primitive_coefficient(k, r, b)
            if b % 2 == 1 and b >= 3:
                assert prim == 0, (k, r, b)
            else:
                assert prim != 0, (k, r, b)
            if b >= 2:
                bracket = bracket_formula(k, r, b)
                assert (bracket == 0) == (prim == 0)


def test_primitive_needs_enough_variables():
    with pytest.raises(TooFewVariables):
        primitive_coefficient(1, 2, 3)


def test_power_sum_expansion_roundtrip():
    # h_2 = (p1^2 + p2)/2 in 3 variables
    sym = localization_pushforward(1, 3, 2)
    expr = power_sum_expansion(sym, 2)
    p1, p2 = Symbol("p1"), Symbol("p2")
    assert expand(expr - (p1 ** 2 + p2) / 2) == 0


def test_segre_pushforward_classes():
    cp5 = projective_space(5)
    H = cp5.ring.gen("H")
    line = ChernData(rank=1, total=1 + 3 * H)
    assert segre_pushforward(line, 1) == -3 * H
    trivial = ChernData(rank=2, total=cp5.ring.one())
    for b in (1, 2):
        assert segre_pushforward(trivial, b).is_zero()


def test_segre_contains_product_monomial():
    # for (1 + N1 a1)(1 + N2 a2) the degree-2 Segre class contains the
    # monomial N1 N2 a1 a2 (sign (-1)^d with d = 2)
    from sysbound.catalog import product
    prod = product(projective_space(2), projective_space(2))
    a1, a2 = prod.ring.gen("H1"), prod.ring.gen("H2")
    for n1, n2 in ((2, 3), (1, 5)):
        bundle = ChernData(rank=2, total=(1 + n1 * a1) * (1 + n2 * a2))
        s2 = segre_pushforward(bundle, 2)
        mono = tuple(1 if g.name in ("H1", "H2") else 0
                     for g in prod.ring.generators)
        assert s2.coefficient(mono) == n1 * n2
        # full value from the series oracle: s2 = c1^2 - c2
        assert s2 == (n1 * a1 + n2 * a2) ** 2 - (n1 * n2) * (a1 * a2)


def test_localization_caps():
    with pytest.raises(PreconditionUnmet):
        localization_pushforward(1, 7, 1)
    with pytest.raises(PreconditionUnmet):
        localization_pushforward(2, 2, 1)
