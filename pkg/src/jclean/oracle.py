"""Exhaustive ground truth over small finite rings.

Everything here enumerates.  Nothing calls the factorizer, so the audit
compares the fast paths against an independent route.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .decomposer import decompose
from .errors import BudgetExceeded, NotClean, Unsupported
from .factorizer import classify_2x2, classify_3x3
from .matrix import Matrix
from .poly import Polynomial
from .rings import Ring

DEFAULT_BUDGET = 10**7


def _check_budget(ring: Ring, n: int, budget: int) -> int:
    if not ring.is_finite:
        raise Unsupported(f"cannot enumerate matrices over infinite ring {ring.spec()}")
    total = ring.size() ** (n * n)
    if total > budget:
        raise BudgetExceeded(f"|M_{n}({ring.spec()})| = {total} exceeds budget {budget}")
    return total


def all_matrices(ring: Ring, n: int, budget: int = DEFAULT_BUDGET) -> Iterator[Matrix]:
    """Every ``n x n`` matrix, row-major lexicographic in canonical element order."""
    _check_budget(ring, n, budget)
    values = list(ring.element_values())
    for flat in itertools.product(values, repeat=n * n):
        yield Matrix._raw(ring, [flat[i * n:(i + 1) * n] for i in range(n)])


def power_iteration_jsharp(A: Matrix) -> bool:
    """Whether ``A^k`` lies in ``M_n(J(R))`` for some ``k <= n * nil_index``."""
    nu = A.ring.nil_index()
    if nu is None:
        raise Unsupported(f"no power bound over {A.ring.spec()}")
    P = A
    for _ in range(A.n * nu):
        if P.in_radical():
            return True
        P = P @ A
    return False


@lru_cache(maxsize=None)
def _idempotents(ring: Ring, n: int) -> tuple[Matrix, ...]:
    return tuple(E for E in all_matrices(ring, n, budget=float("inf")) if E @ E == E)


@lru_cache(maxsize=None)
def _jsharp_set(ring: Ring, n: int) -> frozenset[Matrix]:
    return frozenset(A for A in all_matrices(ring, n, budget=float("inf")) if power_iteration_jsharp(A))


def enumerate_idempotents(ring: Ring, n: int, budget: int = DEFAULT_BUDGET) -> list[Matrix]:
    _check_budget(ring, n, budget)
    return list(_idempotents(ring, n))


def enumerate_jsharp_matrices(ring: Ring, n: int, budget: int = DEFAULT_BUDGET) -> list[Matrix]:
    """All matrices with a power in ``M_n(J(R))``, found by direct power iteration."""
    _check_budget(ring, n, budget)
    members = _jsharp_set(ring, n)
    return [A for A in all_matrices(ring, n, budget) if A in members]


def brute_force_witnesses(A: Matrix, budget: int = DEFAULT_BUDGET) -> list[Matrix]:
    """Every idempotent ``E`` commuting with ``A`` such that ``A - E`` is in J#."""
    _check_budget(A.ring, A.n, budget)
    members = _jsharp_set(A.ring, A.n)
    return [E for E in _idempotents(A.ring, A.n) if E @ A == A @ E and (A - E) in members]


def brute_force_clean_check(A: Matrix, budget: int = DEFAULT_BUDGET) -> bool:
    _check_budget(A.ring, A.n, budget)
    members = _jsharp_set(A.ring, A.n)
    return any(E @ A == A @ E and (A - E) in members for E in _idempotents(A.ring, A.n))


def leibniz_charpoly(A: Matrix) -> Polynomial:
    """``det(tI - A)`` by the permutation expansion over ``R[t]``."""
    ring, n = A.ring, A.n
    t = Polynomial.t(ring)
    entry = [[(t if i == j else 0) - Polynomial.constant(ring, A[i, j]) for j in range(n)] for i in range(n)]
    total = Polynomial(ring)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Polynomial.constant(ring, 1)
        for i in range(n):
            term = term * entry[i][perm[i]]
        total = total - term if inversions % 2 else total + term
    return total


def leibniz_det(A: Matrix):
    ring, n = A.ring, A.n
    total = ring.zero
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ring.one
        for i in range(n):
            term = term * A[i, perm[i]]
        total = total - term if inversions % 2 else total + term
    return total


@dataclass
class AuditReport:
    ring: str
    n: int
    total: int = 0
    clean: int = 0
    not_clean: int = 0
    classifier_checked: bool = False
    disagreements: list[dict] = field(default_factory=list)

    def summary(self) -> str:
        return f"{self.total} checked, {len(self.disagreements)} disagreements"

    def to_json(self) -> dict:
        return {
            "classifier_checked": self.classifier_checked,
            "clean": self.clean,
            "disagreements": self.disagreements,
            "n": self.n,
            "not_clean": self.not_clean,
            "ring": self.ring,
            "summary": self.summary(),
            "total": self.total,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _decompose_verdict(A: Matrix) -> Optional[bool]:
    try:
        decompose(A)
    except NotClean:
        return False
    except Unsupported:
        return None
    return True


def audit(ring: Ring, n: int, budget: int = DEFAULT_BUDGET) -> AuditReport:
    """Compare ``decompose`` (and the 2x2/3x3 classifiers) with brute force on every matrix."""
    _check_budget(ring, n, budget)
    classifier = {2: classify_2x2, 3: classify_3x3}.get(n)
    report = AuditReport(ring.spec(), n, classifier_checked=classifier is not None)
    for A in all_matrices(ring, n, budget):
        expected = brute_force_clean_check(A, budget)
        report.total += 1
        if expected:
            report.clean += 1
        else:
            report.not_clean += 1
        got = _decompose_verdict(A)
        verdicts = {"brute_force": expected, "decompose": got}
        if classifier is not None:
            verdicts["classifier"] = classifier(A).is_clean
        if any(v != expected for v in verdicts.values()):
            report.disagreements.append({"entries": A.entries_text(), **verdicts})
    return report
