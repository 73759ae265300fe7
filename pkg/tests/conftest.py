"""Shared helpers: deterministic random generators for the property suites."""

from __future__ import annotations

import random

import pytest

from quatlat.binpoly import BinaryPoly
from quatlat.embeddings import Matrix2
from quatlat.quaternion import Quaternion, QuaternionAlgebra, standard_algebra
from quatlat.rational import ONE_RF, RationalFunction


def make_rng(seed: int = 0x5EED) -> random.Random:
    return random.Random(seed)


def random_poly(rng: random.Random, max_degree: int = 5) -> BinaryPoly:
    return BinaryPoly(rng.getrandbits(max_degree + 1))


def random_nonzero_poly(rng: random.Random, max_degree: int = 5) -> BinaryPoly:
    while True:
        p = random_poly(rng, max_degree)
        if not p.is_zero():
            return p


def random_rational(rng: random.Random, max_degree: int = 5) -> RationalFunction:
    return RationalFunction(random_poly(rng, max_degree), random_nonzero_poly(rng, max_degree))


def random_quaternion(rng: random.Random, algebra: QuaternionAlgebra, max_degree: int = 2) -> Quaternion:
    return algebra.element(*(random_rational(rng, max_degree) for _ in range(4)))


def random_nonzero_quaternion(rng: random.Random, algebra: QuaternionAlgebra, max_degree: int = 2) -> Quaternion:
    while True:
        q = random_quaternion(rng, algebra, max_degree)
        if not q.is_zero():
            return q


def random_invertible_quaternion(rng: random.Random, algebra: QuaternionAlgebra, max_degree: int = 2) -> Quaternion:
    while True:
        q = random_quaternion(rng, algebra, max_degree)
        if not q.rnorm().is_zero():
            return q


def random_unit(rng: random.Random, var_bits: int = 0b10) -> RationalFunction:
    """A valuation-zero element: nonzero constant terms top and bottom."""
    num = BinaryPoly(1 | (rng.getrandbits(4) << 1))
    den = BinaryPoly(1 | (rng.getrandbits(4) << 1))
    return RationalFunction(num, den)


def random_integral_unit_matrix(rng: random.Random, var: str) -> Matrix2:
    """A random element of GL2 of the valuation ring: a product of integral
    elementary matrices, unit diagonals and swaps."""
    m = Matrix2.identity(var)
    zero = RationalFunction(BinaryPoly(0), BinaryPoly(1))
    one = ONE_RF
    for _ in range(rng.randint(2, 5)):
        kind = rng.randrange(4)
        if kind == 0:
            p = RationalFunction(random_poly(rng, 3), BinaryPoly(1))
            f = Matrix2(var, one, p, zero, one)
        elif kind == 1:
            p = RationalFunction(random_poly(rng, 3), BinaryPoly(1))
            f = Matrix2(var, one, zero, p, one)
        elif kind == 2:
            f = Matrix2(var, random_unit(rng), zero, zero, random_unit(rng))
        else:
            f = Matrix2(var, zero, one, one, zero)
        m = m * f
    return m


def random_invertible_matrix(rng: random.Random, var: str, max_degree: int = 3) -> Matrix2:
    while True:
        m = Matrix2(var, *(random_rational(rng, max_degree) for _ in range(4)))
        if not m.det().is_zero():
            return m


@pytest.fixture(scope="session")
def algebra() -> QuaternionAlgebra:
    return standard_algebra()
