"""Shared constructors and seeded generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from jclean import Matrix, Polynomial, ring_parse
from jclean.rings import LocalizedIntegers, Ring, RingElement


def ring(spec: str) -> Ring:
    return ring_parse(spec)


def mat(spec_or_ring, rows) -> Matrix:
    R = ring_parse(spec_or_ring) if isinstance(spec_or_ring, str) else spec_or_ring
    return Matrix(R, [[R(x) for x in row] for row in rows])


def poly(spec_or_ring, text: str) -> Polynomial:
    from jclean import poly_parse

    R = ring_parse(spec_or_ring) if isinstance(spec_or_ring, str) else spec_or_ring
    return poly_parse(R, text)


def random_element(R: Ring, rng: random.Random) -> RingElement:
    if R.is_finite:
        return R.elements()[rng.randrange(R.size())]
    if isinstance(R, LocalizedIntegers):
        den = rng.randint(1, 9)
        while den % R.p == 0:
            den += 1
        return R(Fraction(rng.randint(-9, 9), den))
    return R(rng.randint(-6, 6))


def random_matrix(R: Ring, n: int, rng: random.Random) -> Matrix:
    return Matrix(R, [[random_element(R, rng) for _ in range(n)] for _ in range(n)])


def random_monic(R: Ring, degree: int, rng: random.Random) -> Polynomial:
    coeffs = [random_element(R, rng) for _ in range(degree)] + [R.one]
    return Polynomial(R, coeffs)
