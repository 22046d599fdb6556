"""Shared fixtures and helpers for the talex test suite."""

from fractions import Fraction

import numpy as np
import pytest

import talex
from talex.fixtures import fixture_path
from talex.laurent import LaurentPoly, LaurentRational


def P(*coeffs, min_exp=0):
    """Exact Laurent polynomial from ascending coefficients.

    P(7, -13, 7) is 7 - 13t + 7t^2.
    """
    return LaurentPoly({min_exp + k: Fraction(c) for k, c in enumerate(coeffs)})


def CP(*coeffs, min_exp=0):
    """Complex-coefficient Laurent polynomial from ascending coefficients."""
    return LaurentPoly({min_exp + k: complex(c) for k, c in enumerate(coeffs)})


def load_fixture_text(name):
    with open(fixture_path(name)) as fh:
        return fh.read()


def normalized(p):
    """Shift a Laurent polynomial so its lowest exponent is zero."""
    return p.shift(-p.min_exp()) if not p.is_zero() else p


def equal_up_to_even_shift(a: LaurentRational, b: LaurentRational) -> bool:
    """Equality of rational functions up to multiplication by t^{2i}."""
    lhs = a.num * b.den
    rhs = b.num * a.den
    if lhs.is_zero() or rhs.is_zero():
        return lhs.is_zero() and rhs.is_zero()
    offset = lhs.min_exp() - rhs.min_exp()
    return offset % 2 == 0 and lhs.shift(-offset) == rhs


def random_det1_matrix(rng):
    """A random complex 2x2 matrix normalized to determinant one."""
    while True:
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(d) > 1e-3:
            return [[complex(e) for e in row] for row in m / np.sqrt(d)]


def random_word(rng, num_gens, max_len):
    letters = []
    for _ in range(int(rng.integers(0, max_len + 1))):
        g = int(rng.integers(1, num_gens + 1))
        letters.append(g if rng.random() < 0.5 else -g)
    return talex.FreeWord(letters)


@pytest.fixture(scope="session")
def trefoil():
    return talex.parse_presentation(load_fixture_text("3_1.pres"))


@pytest.fixture(scope="session")
def p935():
    return talex.parse_presentation(load_fixture_text("9_35.pres"))


@pytest.fixture(scope="session")
def p820():
    return talex.pd_to_wirtinger(talex.parse_pd(load_fixture_text("8_20.pd")))


@pytest.fixture(scope="session")
def trefoil_irr(trefoil):
    """One solved irreducible trefoil representation (trace slice tr(ab)=1)."""
    cons = {trefoil.word("a"): 2.1 + 0j, trefoil.word("b"): 2.1 + 0j,
            trefoil.word("ab"): 1.0 + 0j}
    return talex.solve_representation(trefoil, cons, seed=0)


@pytest.fixture(scope="session")
def p935_curve_rep():
    """One solved 9_35 representation on the curve component y^2 = z + 1."""
    from talex import charcurves
    return charcurves.solve_on_curve(2.5, 2.5 ** 2 - 1.0, seed=0)


TREFOIL_V = [[-1, 1], [0, -1]]
