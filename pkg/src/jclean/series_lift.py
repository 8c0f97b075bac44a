"""Lifting decompositions from ``A(0)`` to ``A(x)`` over ``R[[x]]/(x^m)``.

The characteristic polynomial is written as ``y^2 - mu*y - lam`` (2x2) or
``y^3 - mu*y^2 - lam*y - gamma`` (3x3), with ``mu, lam, gamma`` in ``R[[x]]``.
A base root ``b0`` extends to a series root ``y = b0 + b1 x + ...`` one
coefficient at a time: the ``x^i`` coefficient of ``f(y)`` is linear in
``b_i`` with slope ``2 b0 - mu_0`` (quadratic) or ``3 b0^2 - 2 b0 mu_0 - lam_0``
(cubic), and that slope is a unit whenever ``b0`` separates the J-part from
the (1+J)-part.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Any

from .decomposer import Decomposition, _decompose_componentwise, decompose_from_factorization
from .errors import NotClean, Unsupported
from .factorizer import SCFactorization, Verdict, classify_2x2, classify_3x3
from .jsharp import matrix_in_jsharp
from .matrix import Matrix, charpoly
from .poly import Polynomial, bezout_comaximal
from .rings import RingElement, TruncatedSeries, local_components


@dataclass(frozen=True)
class SeriesRoot:
    """A root ``y`` of ``f`` in the truncated series ring."""

    value: RingElement
    residue_class: str  # "J" or "1+J"

    @property
    def coeffs(self) -> list[RingElement]:
        return self.value.coeffs()


def _series_ring(f: Polynomial, degree: int) -> TruncatedSeries:
    ring = f.ring
    if not isinstance(ring, TruncatedSeries):
        raise ValueError(f"{ring.spec()} is not a truncated series ring")
    if f.degree != degree or not f.is_monic():
        raise ValueError(f"expected a monic polynomial of degree {degree}, got {f}")
    return ring


def _convolve(a: list[RingElement], b: list[RingElement], i: int) -> RingElement:
    acc = a[0].ring.zero
    for k in range(i + 1):
        acc = acc + a[k] * b[i - k]
    return acc


def _residue_class(b0: RingElement) -> str:
    if b0.in_jacobson():
        return "J"
    if (b0 - 1).in_jacobson():
        return "1+J"
    return "other"


def lift_root_quadratic(f: Polynomial, b0: Any) -> SeriesRoot:
    """Extend a base root of ``f(0)`` to a root of ``f`` in ``R[[x]]/(x^m)``."""
    ring = _series_ring(f, 2)
    base, m = ring.base, ring.m
    b0 = base(b0)
    mu = (-f.coeff(1)).coeffs()
    lam = (-f.coeff(0)).coeffs()
    if not (b0 * b0 - b0 * mu[0] - lam[0]).is_zero():
        raise ValueError(f"{b0} is not a root of the constant part of {f}")
    slope = 2 * b0 - mu[0]
    if not slope.is_unit():
        raise ValueError(f"2*b0 - mu_0 = {slope} is not a unit")
    inv = slope.inverse()
    b = [b0] + [base.zero] * (m - 1)
    for i in range(1, m):
        # x^i coefficient of y^2 - mu y - lam, with b_i still zero
        known = _convolve(b, b, i) - _convolve(b, mu, i) - lam[i]
        b[i] = -known * inv
    y = ring(tuple(b))
    assert f(y).is_zero(), f"lifted value {y} is not a root of {f}"
    return SeriesRoot(y, _residue_class(b0))


def lift_root_cubic(f: Polynomial, b0: Any) -> SeriesRoot:
    """Cubic analogue of :func:`lift_root_quadratic`."""
    ring = _series_ring(f, 3)
    base, m = ring.base, ring.m
    b0 = base(b0)
    mu = (-f.coeff(2)).coeffs()
    lam = (-f.coeff(1)).coeffs()
    gamma = (-f.coeff(0)).coeffs()
    if not (b0**3 - b0 * b0 * mu[0] - b0 * lam[0] - gamma[0]).is_zero():
        raise ValueError(f"{b0} is not a root of the constant part of {f}")
    slope = 3 * b0 * b0 - 2 * b0 * mu[0] - lam[0]
    if not slope.is_unit():
        raise ValueError(f"3*b0^2 - 2*b0*mu_0 - lam_0 = {slope} is not a unit")
    inv = slope.inverse()
    b = [b0] + [base.zero] * (m - 1)
    for i in range(1, m):
        c = [_convolve(b, b, j) for j in range(i + 1)]  # y^2
        d_i = _convolve(b, c, i)  # y^3
        known = d_i - _convolve(mu, c, i) - _convolve(lam, b, i) - gamma[i]
        b[i] = -known * inv
    y = ring(tuple(b))
    assert f(y).is_zero(), f"lifted value {y} is not a root of {f}"
    return SeriesRoot(y, _residue_class(b0))


def series_decompose(A: Matrix) -> Decomposition:
    """Decompose a 2x2 or 3x3 matrix over a truncated series ring by root lifting.

    ``A(x)`` is strongly J#-clean exactly when ``A(0)`` is; raises
    :class:`NotClean` otherwise.
    """
    ring = A.ring
    if not isinstance(ring, TruncatedSeries):
        raise ValueError(f"{ring.spec()} is not a truncated series ring")
    if A.n not in (2, 3):
        raise Unsupported(f"series lifting is implemented for n = 2, 3, not {A.n}")
    comps = local_components(ring)
    if len(comps) > 1:
        return _decompose_componentwise(A, comps, series_decompose)

    base = ring.base
    A0 = A.map(lambda e: e.coeff(0), base)
    cls = (classify_2x2 if A.n == 2 else classify_3x3)(A0)
    if cls.verdict is Verdict.NOT_CLEAN:
        raise NotClean(f"A(0) is not strongly J#-clean over {base.spec()}")
    if cls.verdict is Verdict.UNSUPPORTED:
        raise Unsupported(cls.witnesses.get("reason", f"cannot classify A(0) over {base.spec()}"))

    chi = charpoly(A)
    one = Polynomial.constant(ring, 1)
    root = None
    if cls.verdict is Verdict.JSHARP:
        assert matrix_in_jsharp(A)
        h0, h1 = chi, one
    elif cls.verdict is Verdict.ONE_MINUS_JSHARP:
        assert matrix_in_jsharp(Matrix.identity(ring, A.n) - A)
        h0, h1 = one, chi
    elif A.n == 2:
        root = lift_root_quadratic(chi, cls.witnesses["roots"][0])
        h0 = Polynomial.linear(ring, root.value)
        h1, rem = divmod(chi, h0)
        assert rem.is_zero()
    else:
        root = lift_root_cubic(chi, cls.witnesses["root"])
        if cls.witnesses["case"] == 4:
            h0 = Polynomial.linear(ring, root.value)
            h1, rem = divmod(chi, h0)
        else:
            h1 = Polynomial.linear(ring, root.value)
            h0, rem = divmod(chi, h1)
        assert rem.is_zero()
    fact = SCFactorization(h0, h1, bezout_comaximal(h0, h1))
    fact.check(chi)
    return dataclasses.replace(decompose_from_factorization(A, fact), root=root)
