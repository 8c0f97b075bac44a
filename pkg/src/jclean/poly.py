"""Dense univariate polynomials over the ring tower."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import TYPE_CHECKING, Any, Iterable, Sequence

from . import _terms
from .errors import NotComaximal, RingMismatch, Unsupported
from .rings import LocalizedIntegers, Ring, RingElement

if TYPE_CHECKING:
    from .matrix import Matrix


class Polynomial:
    """Polynomial in ``t`` with coefficients in ascending degree, zeros trimmed."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable[Any] = ()):
        cs = [ring(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def t(cls, ring: Ring) -> "Polynomial":
        return cls(ring, [0, 1])

    @classmethod
    def constant(cls, ring: Ring, c: Any) -> "Polynomial":
        return cls(ring, [c])

    @classmethod
    def linear(cls, ring: Ring, root: Any) -> "Polynomial":
        """``t - root``."""
        return cls(ring, [-ring(root), 1])

    @classmethod
    def shifted_power(cls, ring: Ring, r: Any, k: int) -> "Polynomial":
        """``(t - r)^k``, expanded."""
        return cls.linear(ring, r) ** k

    # -- shape ---------------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> RingElement:
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> RingElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    # -- arithmetic ----------------------------------------------------------
    def _other(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring.spec()} vs {self.ring.spec()}")
            return other
        return Polynomial(self.ring, [other])

    def __add__(self, other):
        g = self._other(other)
        n = max(len(self.coeffs), len(g.coeffs))
        return Polynomial(self.ring, [self.coeff(i) + g.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        g = self._other(other)
        if self.is_zero() or g.is_zero():
            return Polynomial(self.ring)
        ring = self.ring
        out = [ring.int_v(0)] * (len(self.coeffs) + len(g.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(g.coeffs):
                out[i + j] = ring.add_v(out[i + j], ring.mul_v(a.value, b.value))
        return Polynomial(ring, [RingElement(ring, v) for v in out])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = Polynomial(self.ring, [1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, d):
        return monic_divmod(self, d)

    def __floordiv__(self, d):
        return monic_divmod(self, d)[0]

    def __mod__(self, d):
        return monic_divmod(self, d)[1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, (int, RingElement)) and not isinstance(other, bool):
            return self == Polynomial(self.ring, [other])
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    # -- evaluation ----------------------------------------------------------
    def __call__(self, x: Any) -> Any:
        """Horner evaluation at a ring element, a polynomial, or a matrix."""
        from .matrix import Matrix

        if isinstance(x, Matrix):
            return eval_at_matrix(self, x)
        if isinstance(x, Polynomial):
            acc = Polynomial(self.ring)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = self.ring(x)
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map(self, fn, ring: Ring) -> "Polynomial":
        """Apply ``fn`` to every coefficient, landing in ``ring``."""
        return Polynomial(ring, [fn(c) for c in self.coeffs])

    def __str__(self):
        return _terms.format_terms(
            ((i, str(c)) for i, c in reversed(list(enumerate(self.coeffs)))), "t"
        )

    def __repr__(self):
        return f"Polynomial({self.ring.spec()}, {self})"


def poly_parse(ring: Ring, text: str) -> Polynomial:
    """Read ``t^3 - 2*t^2 + t`` style text; compound coefficients go in parentheses."""
    terms = _terms.parse_terms(text, "t", ring.parse_v, ring.neg_v)
    size = max(d for d, _ in terms) + 1
    coeffs = [ring.int_v(0)] * size
    for d, c in terms:
        coeffs[d] = ring.add_v(coeffs[d], c)
    return Polynomial(ring, [RingElement(ring, v) for v in coeffs])


def monic_divmod(f: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    """``(q, r)`` with ``f = q*d + r`` and ``deg r < deg d``; ``d`` must be monic."""
    if f.ring != d.ring:
        raise RingMismatch(f"{f.ring.spec()} vs {d.ring.spec()}")
    if not d.is_monic():
        raise ValueError(f"divisor {d} is not monic")
    ring = f.ring
    rem = [c.value for c in f.coeffs]
    dv = [c.value for c in d.coeffs]
    k = len(dv) - 1
    if len(rem) <= k:
        return Polynomial(ring), f
    quot = [ring.int_v(0)] * (len(rem) - k)
    for i in range(len(rem) - 1, k - 1, -1):
        c = rem[i]
        quot[i - k] = c
        for j in range(k + 1):
            rem[i - k + j] = ring.sub_v(rem[i - k + j], ring.mul_v(c, dv[j]))
    wrap = lambda vs: Polynomial(ring, [RingElement(ring, v) for v in vs])  # noqa: E731
    return wrap(quot), wrap(rem[:k])


def eval_at_matrix(f: Polynomial, A: "Matrix") -> "Matrix":
    from .matrix import Matrix

    if f.ring != A.ring:
        raise RingMismatch(f"{f.ring.spec()} vs {A.ring.spec()}")
    acc = Matrix.zeros(A.ring, A.n)
    for c in reversed(f.coeffs):
        acc = acc @ A + Matrix.scalar(c, A.n)
    return acc


def congruent_mod_J(f: Polynomial, g: Polynomial) -> bool:
    """True iff every coefficient of ``f - g`` lies in the Jacobson radical."""
    return all(c.in_jacobson() for c in (f - g).coeffs)


@dataclass(frozen=True)
class BezoutPair:
    """Cofactors with ``u0*h0 + u1*h1 = 1``, ``deg u0 < deg h1``, ``deg u1 < deg h0``."""

    u0: Polynomial
    u1: Polynomial
    h0: Polynomial
    h1: Polynomial

    def holds(self) -> bool:
        return self.u0 * self.h0 + self.u1 * self.h1 == 1


def integer_bezout_seed(p: int, q: int) -> tuple[list[int], list[int]]:
    """Integer cofactors ``(a, b)`` with ``a*t^p + b*(t-1)^q = 1``.

    Expands ``1 = (t - (t-1))^(p+q-1)`` binomially and sorts the terms by
    which of ``t^p`` or ``(t-1)^q`` they contain.  Returned ascending, with
    ``deg a < q`` and ``deg b < p``.
    """
    if p == 0 or q == 0:
        return ([1], [0]) if p == 0 else ([0], [1])
    n = p + q - 1

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def t_minus_one_pow(k):
        return [comb(k, i) * (-1) ** (k - i) for i in range(k + 1)]

    a = [0] * q
    b = [0] * p
    for k in range(n + 1):
        sign = (-1) ** (n - k)
        if k >= p:
            term = poly_mul([0] * (k - p) + [1], t_minus_one_pow(n - k))
            for i, c in enumerate(term):
                a[i] += sign * comb(n, k) * c
        else:
            term = poly_mul([0] * k + [1], t_minus_one_pow(n - k - q))
            for i, c in enumerate(term):
                b[i] += sign * comb(n, k) * c
    return a, b


def _check_classes(h0: Polynomial, h1: Polynomial) -> tuple[int, int]:
    ring = h0.ring
    if h1.ring != ring:
        raise RingMismatch(f"{h0.ring.spec()} vs {h1.ring.spec()}")
    if not (h0.is_monic() and h1.is_monic()):
        raise NotComaximal("Bezout cofactors require monic inputs")
    p, q = h0.degree, h1.degree
    if not congruent_mod_J(h0, Polynomial.t(ring) ** p):
        raise NotComaximal(f"{h0} is not congruent to t^{p} modulo J")
    if not congruent_mod_J(h1, Polynomial.shifted_power(ring, 1, q)):
        raise NotComaximal(f"{h1} is not congruent to (t-1)^{q} modulo J")
    return p, q


def _normalize(u0: Polynomial, h0: Polynomial, h1: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Reduce ``u0`` mod ``h1`` and recover ``u1`` plus the remaining defect."""
    u0 = u0 % h1
    u1, defect = monic_divmod(Polynomial.constant(h0.ring, 1) - u0 * h0, h1)
    return u0, u1, defect


def bezout_comaximal(h0: Polynomial, h1: Polynomial) -> BezoutPair:
    """Exact Bezout cofactors for ``h0 = t^p (mod J)`` and ``h1 = (t-1)^q (mod J)``.

    Nil radical: seed with the integer identity for ``t^p`` and ``(t-1)^q``,
    then square away the defect (which lies in ``J[t]``) until it vanishes.
    ``Z_(p)``: extended Euclid over ``Q`` with a check that every denominator
    is a unit.
    """
    p, q = _check_classes(h0, h1)
    ring = h0.ring
    if q == 0:
        return BezoutPair(Polynomial(ring), Polynomial(ring, [1]), h0, h1)
    if p == 0:
        return BezoutPair(Polynomial(ring, [1]), Polynomial(ring), h0, h1)

    nu = ring.nil_index()
    if nu is None:
        if not isinstance(ring, LocalizedIntegers):
            raise Unsupported(f"Bezout cofactors over {ring.spec()} need a nilpotent radical")
        return _bezout_over_rationals(h0, h1)

    a, _ = integer_bezout_seed(p, q)
    u0, u1, defect = _normalize(Polynomial(ring, a), h0, h1)
    rounds = 0
    while not defect.is_zero():
        # the defect lies in J^(2^rounds)[t] and J^nu = 0
        if 2**rounds >= nu:
            raise AssertionError(f"Bezout correction did not terminate over {ring.spec()}")
        rounds += 1
        u0, u1, defect = _normalize(u0 * (1 + defect), h0, h1)
    pair = BezoutPair(u0, u1, h0, h1)
    assert pair.holds()
    return pair


def _q_divmod(f: list[Fraction], d: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    f = list(f)
    k = len(d) - 1
    quot = [Fraction(0)] * max(len(f) - k, 0)
    for i in range(len(f) - 1, k - 1, -1):
        c = f[i] / d[-1]
        quot[i - k] = c
        for j in range(k + 1):
            f[i - k + j] -= c * d[j]
    rem = f[:k]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _q_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _q_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return [Fraction(x) for x in out]


def _bezout_over_rationals(h0: Polynomial, h1: Polynomial) -> BezoutPair:
    ring = h0.ring
    f = [c.value for c in h0.coeffs]
    g = [c.value for c in h1.coeffs]
    r0, r1 = f, g
    s0, s1 = [Fraction(1)], []
    while r1:
        quot, rem = _q_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _q_sub(s0, _q_mul(quot, s1))
    if len(r0) != 1:
        raise NotComaximal(f"{h0} and {h1} share a factor over Q")
    s0 = [c / r0[0] for c in s0]
    _, u0 = _q_divmod(s0, g)
    u1, rem = _q_divmod(_q_sub([Fraction(1)], _q_mul(u0, f)), g)
    assert not rem
    bad = [c for c in u0 + u1 if c.denominator % ring.p == 0]  # type: ignore[attr-defined]
    if bad:
        raise NotComaximal(f"cofactor coefficient {bad[0]} is not in {ring.spec()}")
    pair = BezoutPair(Polynomial(ring, u0), Polynomial(ring, u1), h0, h1)
    assert pair.holds()
    return pair

