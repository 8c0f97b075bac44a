"""Building and checking decompositions ``A = E + W``.

``E`` is idempotent, ``W`` has a power in ``M_n(J(R))``, and ``EW = WE``.
Given cofactors ``u0*h0 + u1*h1 = 1`` for a splitting of a polynomial that
annihilates ``A``, the idempotent is ``E = u0(A) h0(A)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import NotClean
from .factorizer import SCFactorization, sc_factorize
from .jsharp import matrix_in_jsharp
from .matrix import Matrix, charpoly
from .rings import combine, local_components, project


@dataclass(frozen=True)
class VerificationReport:
    sum_ok: bool
    idempotent: bool
    commute: bool
    jsharp: bool
    radical_power: Optional[int] = None
    """Smallest ``k`` with ``W^k`` in ``M_n(J(R))``; at most ``n`` when ``W`` is in J#."""
    nil_power: Optional[int] = None
    """Smallest ``k`` with ``W^k = 0``; only computed when J is nilpotent."""

    @property
    def passed(self) -> bool:
        return self.sum_ok and self.idempotent and self.commute and self.jsharp

    def failures(self) -> list[str]:
        names = ("sum_ok", "idempotent", "commute", "jsharp")
        return [n for n in names if not getattr(self, n)]

    def to_json(self) -> dict:
        return {
            "commute": self.commute,
            "idempotent": self.idempotent,
            "jsharp": self.jsharp,
            "nil_power": self.nil_power,
            "passed": self.passed,
            "radical_power": self.radical_power,
            "sum_ok": self.sum_ok,
        }


@dataclass(frozen=True)
class Decomposition:
    A: Matrix
    E: Matrix
    W: Matrix
    factorization: Optional[SCFactorization]
    verification: VerificationReport
    components: tuple["Decomposition", ...] = field(default=())
    root: Optional[object] = None


def verify(A: Matrix, E: Matrix, W: Matrix) -> VerificationReport:
    """Check ``E + W = A``, ``E^2 = E``, ``EW = WE`` and ``W`` in J#."""
    jsharp = matrix_in_jsharp(W)
    radical_power = nil_power = None
    if jsharp:
        # chi(W) = t^n mod J puts W^n in M_n(J); J^nu = 0 then kills W^(n*nu)
        nu = A.ring.nil_index()
        bound = A.n * (nu or 1)
        P = W
        for k in range(1, bound + 1):
            if radical_power is None and P.in_radical():
                radical_power = k
                if nu is None:
                    break
            if P.is_zero():
                nil_power = k
                break
            P = P @ W
    return VerificationReport(
        sum_ok=E + W == A,
        idempotent=E @ E == E,
        commute=E @ W == W @ E,
        jsharp=jsharp,
        radical_power=radical_power,
        nil_power=nil_power,
    )


def decompose_from_factorization(A: Matrix, fact: SCFactorization) -> Decomposition:
    """Decomposition from a splitting of any polynomial annihilating ``A``."""
    h = fact.product
    if not h(A).is_zero():
        raise ValueError(f"{h} does not annihilate the matrix")
    E = fact.bezout.u0(A) @ fact.h0(A)
    W = A - E
    report = verify(A, E, W)
    if not report.passed:
        raise AssertionError(f"decomposition checks failed: {report.failures()}")
    return Decomposition(A, E, W, fact, report)


def decompose(A: Matrix) -> Decomposition:
    """Strongly J#-clean decomposition of ``A``.

    Raises :class:`NotClean` (certified) or :class:`Unsupported`.  Rings that
    split as products (``Z/6``, ...) are decomposed factor by factor and
    reassembled with the Chinese remainder theorem.
    """
    comps = local_components(A.ring)
    if len(comps) > 1:
        return _decompose_componentwise(A, comps, decompose)
    fact = sc_factorize(charpoly(A))
    return decompose_from_factorization(A, fact)


def _decompose_componentwise(A: Matrix, comps, solver) -> Decomposition:
    parts = []
    for c in comps:
        local = A.map(lambda e, c=c: project(e, c), c)
        try:
            parts.append(solver(local))
        except NotClean as exc:
            raise NotClean(f"component {c.spec()}: {exc}") from exc
    ring = A.ring
    grid = [
        [combine(ring, [d.E[i, j] for d in parts]) for j in range(A.n)]
        for i in range(A.n)
    ]
    E = Matrix(ring, grid)
    W = A - E
    report = verify(A, E, W)
    if not report.passed:
        raise AssertionError(f"decomposition checks failed: {report.failures()}")
    return Decomposition(A, E, W, None, report, components=tuple(parts))


def iter_decompositions(matrices) -> Iterator[tuple[Matrix, Optional[Decomposition]]]:
    """Pair each matrix with its decomposition, or ``None`` when certified not clean."""
    for A in matrices:
        try:
            yield A, decompose(A)
        except NotClean:
            yield A, None
