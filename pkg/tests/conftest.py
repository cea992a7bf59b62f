import random
from fractions import Fraction

import pytest

from hochschild.algebra.coeff import QQ, CoefficientField, RatFun
from hochschild.algebra.groebner import buchberger
from hochschild.algebra.poly import Ambient, Polynomial

CUBIC = "z1^3+z2^3+z3^3+3*q*z1*z2*z3"


def random_coefficient(rng: random.Random, ambient: Ambient, laurent: bool = False):
    """
    A small coefficient of the ambient field. Over Q(q) it is a
    Laurent polynomial in q when `laurent`, any rational function otherwise.
    """
    value = Fraction(rng.choice([-1, 1]) * rng.randint(1, 5), rng.randint(1, 3))
    if not ambient.field.is_generic:
        return value
    if laurent or rng.random() < 0.5:
        return RatFun.q(rng.randint(-2, 2)) * value + rng.randint(-2, 2)
    num = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))] + [1]
    den = [rng.randint(-3, 3) for _ in range(rng.randint(0, 2))] + [rng.choice([1, 2, -1])]
    return RatFun(num, den) * value


def random_polynomial(rng: random.Random, ambient: Ambient, terms: int = 4, degree: int = 3, laurent: bool = False) -> Polynomial:
    data = {}
    for _ in range(terms):
        m = tuple(rng.randint(0, degree) for _ in range(ambient.nvars))
        data[m] = random_coefficient(rng, ambient, laurent)
    return Polynomial(ambient, data)


def random_monomial(rng: random.Random, nvars: int = 3, degree: int = 4):
    return tuple(rng.randint(0, degree) for _ in range(nvars))


@pytest.fixture
def ambient():
    """Q(q)[z1,z2,z3] with lex z1 > z2 > z3."""
    return Ambient()


@pytest.fixture
def ambient_q2():
    return Ambient(field=CoefficientField.parse("Qq@2"))


@pytest.fixture
def rational_ambient():
    return Ambient(field=QQ)


@pytest.fixture
def cubic(ambient):
    return ambient.parse(CUBIC)


@pytest.fixture
def cubic_q2(ambient_q2):
    return ambient_q2.parse(CUBIC)


@pytest.fixture
def gradient_basis(cubic):
    return buchberger(cubic.gradient())


@pytest.fixture
def jacobian2_basis(cubic):
    _, d2, d3 = cubic.gradient()
    return buchberger([cubic, d2, d3])
