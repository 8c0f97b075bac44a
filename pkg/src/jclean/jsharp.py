"""Membership tests for J#: elements, matrices, and the polynomial classes J_0 / J_1.

Over a commutative ring an element has a power in ``J(R)`` exactly when it is
itself in ``J(R)`` (maximal ideals are prime), so the element test is plain
radical membership.  A matrix has a power in ``M_n(J(R))`` exactly when its
characteristic polynomial is ``t^n`` modulo ``J(R)``.
"""

from __future__ import annotations

from .matrix import Matrix, charpoly
from .poly import Polynomial, congruent_mod_J
from .rings import RingElement


def elem_in_jsharp(a: RingElement) -> bool:
    return a.in_jacobson()


def matrix_in_jsharp(A: Matrix) -> bool:
    """True iff some power of ``A`` has all entries in ``J(R)``."""
    return congruent_mod_J(charpoly(A), Polynomial.t(A.ring) ** A.n)


def poly_in_class(f: Polynomial, r: int) -> bool:
    """Membership of ``f`` in J_r: monic and ``f = (t - r)^deg f`` modulo ``J(R)``."""
    if r not in (0, 1):
        raise ValueError(f"class tag must be 0 or 1, got {r!r}")
    if not f.is_monic():
        return False
    return congruent_mod_J(f, Polynomial.shifted_power(f.ring, r, f.degree))


def reflect(f: Polynomial) -> Polynomial:
    """``(-1)^deg f * f(1 - u)`` as a polynomial in ``u``; swaps J_1 and J_0."""
    ring = f.ring
    image = f(Polynomial(ring, [1, -1]))
    return -image if f.degree % 2 else image
