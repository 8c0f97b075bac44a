"""Deciding whether ``h = h0 * h1`` with ``h0`` in J_0 and ``h1`` in J_1.

Modulo the radical such a splitting must reduce to ``t^p (t-1)^q``.  When
``J(R)`` is nilpotent the reduction lifts (quadratic Hensel lifting).  Over
``Z_(p)`` the radical is not nilpotent, and degrees up to three are decided
by exhaustive rational-root search.  The small-dimension classifiers for 2x2
and 3x3 matrices are here too.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple, Optional

from sympy import divisors

from .errors import NoFactorization, Unsupported
from .jsharp import poly_in_class
from .matrix import Matrix, charpoly
from .poly import BezoutPair, Polynomial, bezout_comaximal, congruent_mod_J
from .rings import (
    Integers,
    LocalizedIntegers,
    RingElement,
    combine,
    local_components,
    project,
)


@dataclass(frozen=True)
class SCFactorization:
    h0: Polynomial
    h1: Polynomial
    bezout: BezoutPair

    @property
    def p(self) -> int:
        return self.h0.degree

    @property
    def q(self) -> int:
        return self.h1.degree

    @property
    def product(self) -> Polynomial:
        return self.h0 * self.h1

    def check(self, h: Optional[Polynomial] = None) -> None:
        """Raise ``AssertionError`` unless every invariant of the splitting holds."""
        if h is not None:
            assert self.product == h, f"{self.h0} * {self.h1} != {h}"
        assert poly_in_class(self.h0, 0), f"{self.h0} not in J_0"
        assert poly_in_class(self.h1, 1), f"{self.h1} not in J_1"
        assert self.bezout.h0 == self.h0 and self.bezout.h1 == self.h1
        assert self.bezout.holds(), "Bezout identity fails"
        assert self.bezout.u0.degree < max(self.q, 1) and self.bezout.u1.degree < max(self.p, 1)


def split_degree(h: Polynomial) -> Optional[int]:
    """The unique ``p`` with ``h = t^p (t-1)^(n-p)`` modulo ``J(R)``, if any."""
    ring, n = h.ring, h.degree
    t = Polynomial.t(ring)
    hits = [
        p for p in range(n + 1)
        if congruent_mod_J(h, t**p * Polynomial.shifted_power(ring, 1, n - p))
    ]
    assert len(hits) <= 1, f"ambiguous split degrees {hits} for {h}"
    return hits[0] if hits else None


def sc_factorize(h: Polynomial) -> SCFactorization:
    """Split ``h`` into class-0 and class-1 monic factors.

    Raises :class:`NoFactorization` when no splitting exists and
    :class:`Unsupported` when no complete search is available
    (``Z_(p)``-type radicals in degree four or more).
    """
    if not h.is_monic() or h.degree < 1:
        raise ValueError(f"expected a monic polynomial of degree >= 1, got {h}")
    ring, n = h.ring, h.degree
    p = split_degree(h)
    if p is None:
        raise NoFactorization(f"{h} is not t^p (t-1)^q modulo the radical of {ring.spec()}")
    one = Polynomial.constant(ring, 1)
    if p == n:
        h0, h1 = h, one
    elif p == 0:
        h0, h1 = one, h
    elif ring.nil_index() is not None:
        h0, h1 = _hensel_lift(h, p)
    else:
        h0, h1 = _root_split(h, p)
    fact = SCFactorization(h0, h1, bezout_comaximal(h0, h1))
    fact.check(h)
    return fact


def _hensel_lift(h: Polynomial, p: int) -> tuple[Polynomial, Polynomial]:
    ring = h.ring
    nu = ring.nil_index()
    assert nu is not None
    g = Polynomial.t(ring) ** p
    k = Polynomial.shifted_power(ring, 1, h.degree - p)
    # the defect squares each round: J, J^2, J^4, ...
    for _ in range(nu.bit_length() + 1):
        e = h - g * k
        if e.is_zero():
            return g, k
        bez = bezout_comaximal(g, k)
        g, k = g + (bez.u1 * e) % g, k + (bez.u0 * e) % k
    raise AssertionError(f"Hensel lifting of {h} did not terminate over {ring.spec()}")


def _root_split(h: Polynomial, p: int) -> tuple[Polynomial, Polynomial]:
    ring, n = h.ring, h.degree
    if n >= 4:
        raise Unsupported(f"degree {n} splitting over {ring.spec()} is not supported")
    roots = roots_in_cosets(h)
    if p == 1:
        if not roots.in_j:
            raise NoFactorization(f"{h} has no root in J({ring.spec()})")
        h0 = Polynomial.linear(ring, roots.in_j[0])
        h1, r = divmod(h, h0)
    else:
        if not roots.in_one_plus_j:
            raise NoFactorization(f"{h} has no root in 1+J({ring.spec()})")
        h1 = Polynomial.linear(ring, roots.in_one_plus_j[0])
        h0, r = divmod(h, h1)
    assert r.is_zero()
    return h0, h1


# -- root search ------------------------------------------------------------


class CosetRoots(NamedTuple):
    in_j: tuple[RingElement, ...]
    in_one_plus_j: tuple[RingElement, ...]


def roots_in_cosets(f: Polynomial) -> CosetRoots:
    """All roots of ``f`` lying in ``J(R)`` and in ``1 + J(R)``, in canonical order."""
    ring = f.ring
    if not f.is_monic():
        raise ValueError(f"{f} is not monic")
    if ring.is_finite:
        in_j = tuple(r for r in ring.jacobson_elements() if f(r).is_zero())
        shifted = sorted((1 + r for r in ring.jacobson_elements()), key=RingElement.sort_key)
        return CosetRoots(in_j, tuple(r for r in shifted if f(r).is_zero()))
    if isinstance(ring, Integers):
        # J(Z) = 0, so the cosets are {0} and {1}
        return CosetRoots(
            tuple(ring(c) for c in (0,) if f(ring(c)).is_zero()),
            tuple(ring(c) for c in (1,) if f(ring(c)).is_zero()),
        )
    if isinstance(ring, LocalizedIntegers):
        if f.degree > 3:
            raise Unsupported(f"root search over {ring.spec()} is limited to degree 3")
        candidates = sorted(_rational_roots([c.value for c in f.coeffs]))
        local = [ring(c) for c in candidates if c.denominator % ring.p]
        return CosetRoots(
            tuple(r for r in local if r.in_jacobson()),
            tuple(r for r in local if (r - 1).in_jacobson()),
        )
    raise Unsupported(f"no complete root search over {ring.spec()}")


def _rational_roots(coeffs: list[Fraction]) -> set[Fraction]:
    """Rational roots of a polynomial with rational coefficients (ascending)."""
    scale = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    roots: set[Fraction] = set()
    while ints and ints[0] == 0:
        roots.add(Fraction(0))
        ints = ints[1:]
    if len(ints) <= 1:
        return roots
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    for a in divisors(abs(ints[0])):
        for b in divisors(abs(ints[-1])):
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if sum(c * cand**i for i, c in enumerate(ints)) == 0:
                    roots.add(cand)
    return roots


# -- classifier fast paths ------------------------------------------------


def field_case(A: Matrix) -> bool:
    """Over a field: is ``chi(A)`` literally ``t^s (t-1)^r``?"""
    ring = A.ring
    if not ring.is_field:
        raise ValueError(f"{ring.spec()} is not a field")
    f = charpoly(A)
    for d in (Polynomial.t(ring), Polynomial.linear(ring, 1)):
        while f.degree > 0:
            q, r = divmod(f, d)
            if not r.is_zero():
                break
            f = q
    return f == 1


class Verdict(str, enum.Enum):
    JSHARP = "JSharp"
    ONE_MINUS_JSHARP = "OneMinusJSharp"
    SPLIT_ROOTS = "SplitRoots"
    COMPONENTWISE = "ComponentWise"
    NOT_CLEAN = "NotClean"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witnesses: dict[str, Any] = field(default_factory=dict)

    @property
    def is_clean(self) -> Optional[bool]:
        """``True``/``False`` when decided, ``None`` when unsupported."""
        if self.verdict is Verdict.UNSUPPORTED:
            return None
        return self.verdict is not Verdict.NOT_CLEAN

    def to_json(self) -> dict:
        out: dict[str, Any] = {"verdict": self.verdict.value}
        for key, value in self.witnesses.items():
            if key == "components":
                out[key] = [c.to_json() for c in value]
            elif isinstance(value, tuple):
                out[key] = [str(v) for v in value]
            elif isinstance(value, RingElement):
                out[key] = str(value)
            else:
                out[key] = value
        return out


def _componentwise(classify, A: Matrix, comps) -> Classification:
    parts = [classify(A.map(lambda e, c=c: project(e, c), c)) for c in comps]
    verdicts = {c.verdict for c in parts}
    if Verdict.NOT_CLEAN in verdicts:
        return Classification(Verdict.NOT_CLEAN, {"components": parts})
    if Verdict.UNSUPPORTED in verdicts:
        return Classification(Verdict.UNSUPPORTED, {"components": parts})
    if len(verdicts) == 1 and len({c.witnesses.get("case") for c in parts}) == 1:
        verdict = parts[0].verdict
        if verdict is not Verdict.SPLIT_ROOTS:
            return Classification(verdict, dict(parts[0].witnesses))
        witnesses: dict[str, Any] = dict(parts[0].witnesses)
        for key in ("roots", "root"):
            if key in witnesses:
                vals = [c.witnesses[key] for c in parts]
                if key == "roots":
                    witnesses[key] = tuple(combine(A.ring, list(col)) for col in zip(*vals))
                else:
                    witnesses[key] = combine(A.ring, vals)
        return Classification(verdict, witnesses)
    return Classification(Verdict.COMPONENTWISE, {"components": parts})


def classify_2x2(A: Matrix) -> Classification:
    if A.n != 2:
        raise ValueError(f"classify_2x2 needs a 2x2 matrix, got {A.n}x{A.n}")
    comps = local_components(A.ring)
    if len(comps) > 1:
        return _componentwise(classify_2x2, A, comps)
    ring = A.ring
    chi = charpoly(A)
    if congruent_mod_J(chi, Polynomial.t(ring) ** 2):
        return Classification(Verdict.JSHARP)
    if congruent_mod_J(chi, Polynomial.shifted_power(ring, 1, 2)):
        return Classification(Verdict.ONE_MINUS_JSHARP)
    try:
        roots = roots_in_cosets(chi)
    except Unsupported as exc:
        return Classification(Verdict.UNSUPPORTED, {"reason": str(exc)})
    if roots.in_j and roots.in_one_plus_j:
        return Classification(
            Verdict.SPLIT_ROOTS, {"roots": (roots.in_j[0], roots.in_one_plus_j[0])}
        )
    return Classification(Verdict.NOT_CLEAN)


def classify_3x3(A: Matrix) -> Classification:
    """The four cases for 3x3 matrices, read off trace, ``mid`` and determinant."""
    if A.n != 3:
        raise ValueError(f"classify_3x3 needs a 3x3 matrix, got {A.n}x{A.n}")
    comps = local_components(A.ring)
    if len(comps) > 1:
        return _componentwise(classify_3x3, A, comps)
    ring = A.ring
    chi = charpoly(A)
    if congruent_mod_J(chi, Polynomial.t(ring) ** 3):
        return Classification(Verdict.JSHARP, {"case": 1})
    if congruent_mod_J(chi, Polynomial.shifted_power(ring, 1, 3)):
        return Classification(Verdict.ONE_MINUS_JSHARP, {"case": 2})
    tr, mid, det = -chi.coeff(2), chi.coeff(1), -chi.coeff(0)
    in_j = lambda x: x.in_jacobson()  # noqa: E731
    case3 = in_j(tr - 1) and in_j(mid) and in_j(det)
    case4 = in_j(tr - 2) and in_j(mid - 1) and in_j(det)
    if not (case3 or case4):
        return Classification(Verdict.NOT_CLEAN)
    try:
        roots = roots_in_cosets(chi)
    except Unsupported as exc:
        return Classification(Verdict.UNSUPPORTED, {"reason": str(exc)})
    if case3 and roots.in_one_plus_j:
        return Classification(Verdict.SPLIT_ROOTS, {"case": 3, "root": roots.in_one_plus_j[0]})
    if case4 and roots.in_j:
        return Classification(Verdict.SPLIT_ROOTS, {"case": 4, "root": roots.in_j[0]})
    return Classification(Verdict.NOT_CLEAN)


def quadratic_root_criterion(f: Polynomial) -> Optional[RingElement]:
    """A root in ``J(R)`` of ``t^2 + a t + b`` with ``1 + a`` in ``J(R)``, if one exists.

    Such a root ``r`` gives the splitting ``(t - r)(t + a + r)``.
    """
    if f.degree != 2 or not f.is_monic():
        raise ValueError(f"{f} is not a monic quadratic")
    if not (1 + f.coeff(1)).in_jacobson():
        raise ValueError(f"1 + a is not in the radical for {f}")
    roots = roots_in_cosets(f).in_j
    return roots[0] if roots else None


def quadratic_factors(f: Polynomial, r: RingElement) -> tuple[Polynomial, Polynomial]:
    ring = f.ring
    return Polynomial.linear(ring, r), Polynomial(ring, [f.coeff(1) + r, 1])
