"""Square matrices over the ring tower."""

from __future__ import annotations

from typing import Any, Callable, Iterable, Optional, Sequence

from .errors import ParseError, RingMismatch
from .poly import Polynomial
from .rings import Ring, RingElement, ring_parse


class Matrix:
    """Immutable ``n x n`` matrix; ``*`` and ``@`` both mean the matrix product."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: Ring, rows: Iterable[Iterable[Any]]):
        grid = tuple(tuple(ring(x) for x in row) for row in rows)
        n = len(grid)
        if n == 0 or any(len(r) != n for r in grid):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", grid)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, ring: Ring, vals: Sequence[Sequence[Any]]) -> "Matrix":
        m = object.__new__(cls)
        object.__setattr__(m, "ring", ring)
        object.__setattr__(m, "n", len(vals))
        object.__setattr__(m, "rows", tuple(tuple(RingElement(ring, v) for v in row) for row in vals))
        return m

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        return cls.scalar(ring.one, n)

    @classmethod
    def zeros(cls, ring: Ring, n: int) -> "Matrix":
        return cls.scalar(ring.zero, n)

    @classmethod
    def scalar(cls, c: RingElement, n: int) -> "Matrix":
        ring = c.ring
        z = ring.int_v(0)
        return cls._raw(ring, [[c.value if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, ring: Ring, values: Sequence[Any]) -> "Matrix":
        n = len(values)
        return cls(ring, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def values(self) -> list[list[Any]]:
        return [[e.value for e in row] for row in self.rows]

    def __getitem__(self, ij: tuple[int, int]) -> RingElement:
        i, j = ij
        return self.rows[i][j]

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"{other.ring.spec()} vs {self.ring.spec()}")
        if other.n != self.n:
            raise RingMismatch(f"dimension {other.n} vs {self.n}")

    def __add__(self, other):
        self._check(other)
        r = self.ring
        a, b = self.values(), other.values()
        return Matrix._raw(r, [[r.add_v(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])

    def __sub__(self, other):
        self._check(other)
        r = self.ring
        a, b = self.values(), other.values()
        return Matrix._raw(r, [[r.sub_v(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)])

    def __neg__(self):
        r = self.ring
        return Matrix._raw(r, [[r.neg_v(x) for x in row] for row in self.values()])

    def __matmul__(self, other):
        self._check(other)
        r, n = self.ring, self.n
        a, b = self.values(), other.values()
        zero = r.int_v(0)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = r.add_v(acc, r.mul_v(a[i][k], b[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix._raw(r, out)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        c = self.ring(other).value
        r = self.ring
        return Matrix._raw(r, [[r.mul_v(c, x) for x in row] for row in self.values()])

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative matrix power")
        result, base = Matrix.identity(self.ring, self.n), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def map(self, fn: Callable[[RingElement], RingElement], ring: Ring) -> "Matrix":
        return Matrix(ring, [[fn(e) for e in row] for row in self.rows])

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def in_radical(self) -> bool:
        """True iff every entry lies in ``J(R)``, i.e. the matrix is in ``M_n(J(R))``."""
        return all(e.in_jacobson() for row in self.rows for e in row)

    def commutes_with(self, other: "Matrix") -> bool:
        return self @ other == other @ self

    # -- invariants ----------------------------------------------------------
    def trace(self) -> RingElement:
        acc = self.ring.zero
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def charpoly(self) -> Polynomial:
        return charpoly(self)

    def det(self) -> RingElement:
        c0 = charpoly(self).coeff(0)
        return c0 if self.n % 2 == 0 else -c0

    def mid(self) -> RingElement:
        return mid(self)

    # -- text / JSON ---------------------------------------------------------
    def entries_text(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.rows]

    def to_json(self) -> dict:
        return {"ring": self.ring.spec(), "entries": self.entries_text()}

    @classmethod
    def from_json(cls, data: Any, ring: Optional[Ring] = None) -> "Matrix":
        """Build from ``{"ring": ..., "entries": [[...]]}`` or a bare entry grid."""
        if isinstance(data, dict):
            if "entries" not in data:
                raise ParseError("matrix JSON needs an 'entries' field")
            if "ring" in data:
                declared = ring_parse(str(data["ring"]))
                if ring is not None and declared != ring:
                    raise ParseError(f"matrix ring {declared.spec()} does not match {ring.spec()}")
                ring = declared
            data = data["entries"]
        if ring is None:
            raise ParseError("no ring given for matrix")
        if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
            raise ParseError("matrix entries must be a non-empty list of rows")
        n = len(data)
        if any(len(r) != n for r in data):
            raise ParseError(f"matrix is not square ({n} rows)")
        try:
            return cls(ring, [[_entry(ring, x) for x in row] for row in data])
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc)) from exc

    def __str__(self):
        cells = self.entries_text()
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def __repr__(self):
        return f"Matrix({self.ring.spec()}, {self.entries_text()})"


def _entry(ring: Ring, x: Any) -> RingElement:
    if isinstance(x, bool):
        raise ParseError(f"invalid matrix entry {x!r}")
    if isinstance(x, (int, str)):
        return ring(x)
    raise ParseError(f"matrix entries must be strings or integers, got {x!r}")


def identity(ring: Ring, n: int) -> Matrix:
    return Matrix.identity(ring, n)


def scalar_embed(c: RingElement, n: int) -> Matrix:
    return Matrix.scalar(c, n)


def charpoly(A: Matrix) -> Polynomial:
    """``det(tI - A)`` by Berkowitz's division-free algorithm.

    Works bottom-up over the trailing principal submatrices: with ``A`` split
    as ``[[a, R], [C, M]]`` the char-poly coefficient vector of ``A`` is a
    lower-triangular Toeplitz matrix with first column
    ``(1, -a, -R C, -R M C, ..., -R M^(k-1) C)`` applied to that of ``M``.
    """
    ring, n = A.ring, A.n
    a = A.values()
    zero, one = ring.int_v(0), ring.int_v(1)
    vect = [one]  # descending coefficients, submatrix of size 0
    for k in range(n - 1, -1, -1):
        size = n - k - 1
        row = a[k][k + 1:]
        col = [a[i][k] for i in range(k + 1, n)]
        toeplitz = [one, ring.neg_v(a[k][k])]
        v = col
        for _ in range(size):
            dot = zero
            for x, y in zip(row, v):
                dot = ring.add_v(dot, ring.mul_v(x, y))
            toeplitz.append(ring.neg_v(dot))
            nv = []
            for i in range(size):
                acc = zero
                for j in range(size):
                    acc = ring.add_v(acc, ring.mul_v(a[k + 1 + i][k + 1 + j], v[j]))
                nv.append(acc)
            v = nv
        new = []
        for i in range(size + 2):
            acc = zero
            for j in range(min(i, size) + 1):
                acc = ring.add_v(acc, ring.mul_v(toeplitz[i - j], vect[j]))
            new.append(acc)
        vect = new
    return Polynomial(ring, [RingElement(ring, v) for v in reversed(vect)])


def mid(A: Matrix) -> RingElement:
    """Coefficient of ``t`` in the characteristic polynomial of a 3x3 matrix."""
    if A.n != 3:
        raise ValueError(f"mid is defined for 3x3 matrices, got {A.n}x{A.n}")
    return charpoly(A).coeff(1)


def companion(h: Polynomial) -> Matrix:
    """Companion matrix with subdiagonal ones and last column ``-a_0, ..., -a_(n-1)``."""
    if not h.is_monic() or h.degree < 1:
        raise ValueError(f"companion matrix needs a monic polynomial of degree >= 1, got {h}")
    ring, n = h.ring, h.degree
    rows = [[ring.zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = ring.one
    for i in range(n):
        rows[i][n - 1] = -h.coeff(i)
    return Matrix(ring, rows)
