"""Exact commutative rings: Z, Z/n, F_p, Z localized at p, and truncated series.

Every ring is an immutable, hashable descriptor.  Elements are
:class:`RingElement` values wrapping a canonical payload, so equality of
elements is plain equality of payloads:

* ``Integers`` -- a Python ``int``;
* ``IntegersMod`` / ``PrimeField`` -- a residue in ``[0, n)``;
* ``LocalizedIntegers`` -- a reduced :class:`fractions.Fraction` whose
  denominator is prime to ``p``;
* ``TruncatedSeries`` -- a tuple of exactly ``m`` base payloads
  (coefficients of ``1, x, ..., x^(m-1)``).

Ring specs use the grammar ``Z | Zn:<n> | Fp:<p> | Zloc:<p> | series(<spec>,<m>)``.
"""

from __future__ import annotations

import itertools
import math
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Optional, Sequence

from sympy import factorint, isprime

from . import _terms
from .errors import NotAUnit, ParseError, RingMismatch

_INT_RE = re.compile(r"[+-]?\d+")
_FRAC_RE = re.compile(r"([+-]?\d+)/(\d+)")


def _parse_int(text: str) -> int:
    compact = "".join(text.split())
    if not _INT_RE.fullmatch(compact):
        raise ParseError(f"malformed integer literal {text!r}")
    return int(compact)


class Ring(ABC):
    """Payload-level arithmetic plus the element-level conveniences."""

    is_finite: bool = False

    # -- payload primitives -------------------------------------------------
    @abstractmethod
    def canon(self, raw: Any) -> Any: ...

    @abstractmethod
    def add_v(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def neg_v(self, x: Any) -> Any: ...

    @abstractmethod
    def mul_v(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def int_v(self, k: int) -> Any: ...

    @abstractmethod
    def is_unit_v(self, x: Any) -> bool: ...

    @abstractmethod
    def inv_v(self, x: Any) -> Any: ...

    @abstractmethod
    def in_jacobson_v(self, x: Any) -> bool: ...

    @abstractmethod
    def parse_v(self, text: str) -> Any: ...

    @abstractmethod
    def format_v(self, x: Any) -> str: ...

    @abstractmethod
    def nil_index(self) -> Optional[int]:
        """Smallest known ``k`` with ``J(R)^k = 0``, or ``None`` if J is not nilpotent."""

    @abstractmethod
    def spec(self) -> str: ...

    def sub_v(self, x: Any, y: Any) -> Any:
        return self.add_v(x, self.neg_v(y))

    def sort_key(self, x: Any) -> Any:
        return x

    def size(self) -> Optional[int]:
        return None

    def element_values(self) -> Iterator[Any]:
        raise TypeError(f"{self.spec()} is infinite")

    def jacobson_values(self) -> Iterator[Any]:
        return (v for v in self.element_values() if self.in_jacobson_v(v))

    @property
    def is_field(self) -> bool:
        return False

    # -- element level -----------------------------------------------------
    def __call__(self, x: Any) -> "RingElement":
        """Coerce ``x`` (element, int, str, and per-ring extras) into this ring."""
        if isinstance(x, RingElement):
            if x.ring == self:
                return x
            raise RingMismatch(f"element of {x.ring.spec()} used in {self.spec()}")
        if isinstance(x, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(x, int):
            return RingElement(self, self.int_v(x))
        if isinstance(x, str):
            return RingElement(self, self.parse_v(x))
        return RingElement(self, self.canon(x))

    @property
    def zero(self) -> "RingElement":
        return RingElement(self, self.int_v(0))

    @property
    def one(self) -> "RingElement":
        return RingElement(self, self.int_v(1))

    def elements(self) -> list["RingElement"]:
        """All elements in canonical order (finite rings only)."""
        return [RingElement(self, v) for v in self.element_values()]

    def jacobson_elements(self) -> list["RingElement"]:
        return [RingElement(self, v) for v in self.jacobson_values()]

    def __str__(self) -> str:
        return self.spec()


@dataclass(frozen=True)
class Integers(Ring):
    def canon(self, raw: Any) -> int:
        if isinstance(raw, Fraction) and raw.denominator == 1:
            return int(raw)
        if not isinstance(raw, int):
            raise TypeError(f"cannot coerce {raw!r} into Z")
        return raw

    def add_v(self, x, y):
        return x + y

    def neg_v(self, x):
        return -x

    def sub_v(self, x, y):
        return x - y

    def mul_v(self, x, y):
        return x * y

    def int_v(self, k):
        return k

    def is_unit_v(self, x):
        return abs(x) == 1

    def inv_v(self, x):
        if abs(x) != 1:
            raise NotAUnit(f"{x} is not a unit in Z")
        return x

    def in_jacobson_v(self, x):
        return x == 0

    def parse_v(self, text):
        return _parse_int(text)

    def format_v(self, x):
        return str(x)

    def nil_index(self):
        return 1

    def spec(self):
        return "Z"


@dataclass(frozen=True)
class IntegersMod(Ring):
    n: int
    factorization: tuple[tuple[int, int], ...] = field(init=False, compare=False, repr=False)
    radical: int = field(init=False, compare=False, repr=False)

    is_finite = True

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ParseError(f"modulus must be an integer >= 2, got {self.n!r}")
        fac = tuple(sorted(factorint(self.n).items()))
        assert math.prod(p**k for p, k in fac) == self.n
        object.__setattr__(self, "factorization", fac)
        object.__setattr__(self, "radical", math.prod(p for p, _ in fac))

    @property
    def modulus(self) -> int:
        return self.n

    @property
    def is_field(self) -> bool:
        return len(self.factorization) == 1 and self.factorization[0][1] == 1

    def canon(self, raw):
        if not isinstance(raw, int) or isinstance(raw, bool):
            raise TypeError(f"cannot coerce {raw!r} into {self.spec()}")
        return raw % self.modulus

    def add_v(self, x, y):
        return (x + y) % self.modulus

    def neg_v(self, x):
        return -x % self.modulus

    def sub_v(self, x, y):
        return (x - y) % self.modulus

    def mul_v(self, x, y):
        return x * y % self.modulus

    def int_v(self, k):
        return k % self.modulus

    def is_unit_v(self, x):
        return math.gcd(x, self.modulus) == 1

    def inv_v(self, x):
        if math.gcd(x, self.modulus) != 1:
            raise NotAUnit(f"{x} is not a unit in {self.spec()}")
        return pow(x, -1, self.modulus)

    def in_jacobson_v(self, x):
        return x % self.radical == 0

    def parse_v(self, text):
        return _parse_int(text) % self.modulus

    def format_v(self, x):
        return str(x)

    def nil_index(self):
        return max(k for _, k in self.factorization)

    def size(self):
        return self.modulus

    def element_values(self):
        return iter(range(self.modulus))

    def jacobson_values(self):
        return iter(range(0, self.modulus, self.radical))

    def spec(self):
        return f"Zn:{self.n}"


@dataclass(frozen=True)
class PrimeField(IntegersMod):
    """``Z/p`` for prime ``p``; same arithmetic as ``IntegersMod`` but tagged as a field."""

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2 or not isprime(self.n):
            raise ParseError(f"{self.n} is not prime")
        super().__post_init__()

    @property
    def p(self) -> int:
        return self.n

    @property
    def is_field(self) -> bool:
        return True

    def spec(self):
        return f"Fp:{self.n}"


@dataclass(frozen=True)
class LocalizedIntegers(Ring):
    """Rationals ``a/b`` with ``p`` not dividing ``b``."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
            raise ParseError(f"{self.p} is not prime")

    def canon(self, raw):
        if isinstance(raw, int) and not isinstance(raw, bool):
            return Fraction(raw)
        if not isinstance(raw, Fraction):
            raise TypeError(f"cannot coerce {raw!r} into {self.spec()}")
        if raw.denominator % self.p == 0:
            raise ParseError(f"denominator of {raw} is divisible by {self.p}")
        return raw

    def add_v(self, x, y):
        return x + y

    def neg_v(self, x):
        return -x

    def sub_v(self, x, y):
        return x - y

    def mul_v(self, x, y):
        return x * y

    def int_v(self, k):
        return Fraction(k)

    def is_unit_v(self, x):
        return x.numerator % self.p != 0

    def inv_v(self, x):
        if x.numerator % self.p == 0:
            raise NotAUnit(f"{x} is not a unit in {self.spec()}")
        return 1 / x

    def in_jacobson_v(self, x):
        return x.numerator % self.p == 0

    def parse_v(self, text):
        compact = "".join(text.split())
        m = _FRAC_RE.fullmatch(compact)
        if m:
            num, den = int(m.group(1)), int(m.group(2))
            if den == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return self.canon(Fraction(num, den))
        return Fraction(_parse_int(text))

    def format_v(self, x):
        return str(x)

    def nil_index(self):
        return None

    def spec(self):
        return f"Zloc:{self.p}"


@dataclass(frozen=True)
class TruncatedSeries(Ring):
    """``base[[x]]/(x^m)``."""

    base: Ring
    m: int

    def __post_init__(self):
        if not isinstance(self.base, Ring):
            raise ParseError(f"series base must be a ring, got {self.base!r}")
        if not isinstance(self.m, int) or self.m < 1:
            raise ParseError(f"series precision must be >= 1, got {self.m!r}")

    @property
    def is_finite(self) -> bool:  # type: ignore[override]
        return self.base.is_finite

    def canon(self, raw):
        if isinstance(raw, RingElement) and raw.ring == self.base:
            raw = (raw.value,)
        if isinstance(raw, (int, Fraction)) and not isinstance(raw, bool):
            return (self.base.canon(raw),) + (self.base.int_v(0),) * (self.m - 1)
        if not isinstance(raw, (tuple, list)):
            raise TypeError(f"cannot coerce {raw!r} into {self.spec()}")
        if len(raw) > self.m:
            raise ParseError(f"{len(raw)} coefficients given for precision {self.m}")
        coeffs = [self.base(c).value for c in raw]
        coeffs += [self.base.int_v(0)] * (self.m - len(coeffs))
        return tuple(coeffs)

    def add_v(self, x, y):
        b = self.base
        return tuple(b.add_v(u, v) for u, v in zip(x, y))

    def neg_v(self, x):
        return tuple(self.base.neg_v(u) for u in x)

    def sub_v(self, x, y):
        b = self.base
        return tuple(b.sub_v(u, v) for u, v in zip(x, y))

    def mul_v(self, x, y):
        b = self.base
        out = []
        for k in range(self.m):
            acc = b.int_v(0)
            for i in range(k + 1):
                acc = b.add_v(acc, b.mul_v(x[i], y[k - i]))
            out.append(acc)
        return tuple(out)

    def int_v(self, k):
        return (self.base.int_v(k),) + (self.base.int_v(0),) * (self.m - 1)

    def is_unit_v(self, x):
        return self.base.is_unit_v(x[0])

    def inv_v(self, x):
        b = self.base
        if not b.is_unit_v(x[0]):
            raise NotAUnit(f"{self.format_v(x)} has non-unit constant term in {self.spec()}")
        c0 = b.inv_v(x[0])
        inv = [c0]
        for k in range(1, self.m):
            acc = b.int_v(0)
            for i in range(1, k + 1):
                acc = b.add_v(acc, b.mul_v(x[i], inv[k - i]))
            inv.append(b.neg_v(b.mul_v(c0, acc)))
        return tuple(inv)

    def in_jacobson_v(self, x):
        return self.base.in_jacobson_v(x[0])

    def parse_v(self, text):
        coeffs = [self.base.int_v(0)] * self.m
        for degree, c in _terms.parse_terms(text, "x", self.base.parse_v, self.base.neg_v):
            if degree >= self.m:
                raise ParseError(f"term of degree {degree} in {text!r} exceeds precision {self.m}")
            coeffs[degree] = self.base.add_v(coeffs[degree], c)
        return tuple(coeffs)

    def format_v(self, x):
        return _terms.format_terms(((i, self.base.format_v(c)) for i, c in enumerate(x)), "x")

    def nil_index(self):
        nu = self.base.nil_index()
        return None if nu is None else self.m * nu

    def sort_key(self, x):
        return tuple(self.base.sort_key(c) for c in x)

    def size(self):
        s = self.base.size()
        return None if s is None else s**self.m

    def element_values(self):
        if not self.base.is_finite:
            raise TypeError(f"{self.spec()} is infinite")
        return itertools.product(list(self.base.element_values()), repeat=self.m)

    def jacobson_values(self):
        if not self.base.is_finite:
            raise TypeError(f"{self.spec()} is infinite")
        heads = list(self.base.jacobson_values())
        tails = list(self.base.element_values())
        for head in heads:
            for rest in itertools.product(tails, repeat=self.m - 1):
                yield (head,) + rest

    def spec(self):
        return f"series({self.base.spec()},{self.m})"


class RingElement:
    """An immutable element of a :class:`Ring`, stored in canonical form."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value: Any):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring.spec()} vs {self.ring.spec()}")
            return other.value
        return self.ring(other).value

    def __add__(self, other):
        return RingElement(self.ring, self.ring.add_v(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.ring, self.ring.sub_v(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return RingElement(self.ring, self.ring.sub_v(self._coerce(other), self.value))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring.mul_v(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg_v(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.ring.int_v(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self):
        return f"{self.ring.spec()}({self})"

    def __str__(self):
        return self.ring.format_v(self.value)

    def is_zero(self) -> bool:
        return self.value == self.ring.int_v(0)

    def is_unit(self) -> bool:
        return self.ring.is_unit_v(self.value)

    def in_jacobson(self) -> bool:
        return self.ring.in_jacobson_v(self.value)

    def inverse(self) -> "RingElement":
        return RingElement(self.ring, self.ring.inv_v(self.value))

    def sort_key(self):
        return self.ring.sort_key(self.value)

    # series helpers
    def coeff(self, i: int) -> "RingElement":
        """Coefficient of ``x^i`` of a truncated-series element."""
        ring = self.ring
        if not isinstance(ring, TruncatedSeries):
            raise TypeError(f"{ring.spec()} is not a series ring")
        return RingElement(ring.base, self.value[i])

    def coeffs(self) -> list["RingElement"]:
        return [self.coeff(i) for i in range(self.ring.m)]  # type: ignore[attr-defined]


# -- spec-level entry points ----------------------------------------------


def ring_parse(spec: str) -> Ring:
    """Parse a ring spec such as ``"Zn:4"`` or ``"series(Zloc:2,3)"``."""
    text = spec.strip()
    try:
        ring, rest = _parse_ring(text, 0)
    except ParseError as exc:
        raise ParseError(f"{exc} in ring spec {spec!r}") from None
    if rest != len(text):
        raise ParseError(f"trailing characters {text[rest:]!r} in ring spec {spec!r}")
    return ring


def _read_decimal(text: str, pos: int, what: str) -> tuple[int, int]:
    m = re.compile(r"\s*(\d+)\s*").match(text, pos)
    if not m:
        token = text[pos:pos + 8] or "<end>"
        raise ParseError(f"expected decimal {what} at {token!r}")
    return int(m.group(1)), m.end()


def _parse_ring(text: str, pos: int) -> tuple[Ring, int]:
    if text.startswith("series(", pos):
        base, pos = _parse_ring(text, pos + len("series("))
        if not text.startswith(",", pos):
            raise ParseError(f"expected ',' at {text[pos:pos + 8] or '<end>'!r}")
        m, pos = _read_decimal(text, pos + 1, "precision")
        if not text.startswith(")", pos):
            raise ParseError(f"expected ')' at {text[pos:pos + 8] or '<end>'!r}")
        if m < 1:
            raise ParseError(f"series precision {m} must be >= 1")
        return TruncatedSeries(base, m), pos + 1
    for prefix, kind in (("Zloc:", "Zloc"), ("Zn:", "Zn"), ("Fp:", "Fp")):
        if text.startswith(prefix, pos):
            value, end = _read_decimal(text, pos + len(prefix), "parameter")
            token = text[pos:end].strip()
            if kind == "Zn":
                if value < 2:
                    raise ParseError(f"modulus in {token!r} must be >= 2")
                return IntegersMod(value), end
            if value < 2 or not isprime(value):
                raise ParseError(f"{value} is not prime in {token!r}")
            return (PrimeField(value) if kind == "Fp" else LocalizedIntegers(value)), end
    if text.startswith("Z", pos) and not text[pos + 1:pos + 2].isalnum():
        return Integers(), pos + 1
    raise ParseError(f"unknown ring at {text[pos:pos + 12] or '<end>'!r}")


def elem_parse(ring: Ring, text: str) -> RingElement:
    return RingElement(ring, ring.parse_v(text))


def is_unit(a: RingElement) -> bool:
    return a.is_unit()


def in_jacobson(a: RingElement) -> bool:
    return a.in_jacobson()


def try_inv(a: RingElement) -> RingElement:
    """Inverse of ``a``; raises :class:`NotAUnit` otherwise."""
    return a.inverse()


def jacobson_nil_index(ring: Ring) -> Optional[int]:
    return ring.nil_index()


# -- splitting into local factors -------------------------------------------


def local_components(ring: Ring) -> list[Ring]:
    """Connected components of ``ring`` (CRT factors); a single entry if already connected.

    ``Z/n`` splits into ``Z/p^k`` factors and a series ring splits along its base.
    """
    if isinstance(ring, IntegersMod) and not isinstance(ring, PrimeField):
        if len(ring.factorization) > 1:
            return [IntegersMod(p**k) for p, k in ring.factorization]
        return [ring]
    if isinstance(ring, TruncatedSeries):
        comps = local_components(ring.base)
        if len(comps) > 1:
            return [TruncatedSeries(c, ring.m) for c in comps]
    return [ring]


def _project_v(src: Ring, dst: Ring, v: Any) -> Any:
    if isinstance(src, TruncatedSeries):
        return tuple(_project_v(src.base, dst.base, c) for c in v)  # type: ignore[attr-defined]
    return v % dst.n  # type: ignore[attr-defined]


def project(a: RingElement, component: Ring) -> RingElement:
    """Image of ``a`` in one of ``local_components(a.ring)``."""
    return RingElement(component, _project_v(a.ring, component, a.value))


def _combine_v(ring: Ring, comps: Sequence[Ring], parts: Sequence[Any]) -> Any:
    if isinstance(ring, TruncatedSeries):
        return tuple(
            _combine_v(ring.base, [c.base for c in comps], [p[i] for p in parts])  # type: ignore[attr-defined]
            for i in range(ring.m)
        )
    n = ring.n  # type: ignore[attr-defined]
    total = 0
    for comp, v in zip(comps, parts):
        q = comp.n  # type: ignore[attr-defined]
        cofactor = n // q
        total += v * cofactor * pow(cofactor, -1, q)
    return total % n


def combine(ring: Ring, parts: Sequence[RingElement]) -> RingElement:
    """Inverse of :func:`project` across all components (Chinese remaindering)."""
    comps = local_components(ring)
    if len(parts) != len(comps):
        raise RingMismatch(f"expected {len(comps)} components, got {len(parts)}")
    return RingElement(ring, _combine_v(ring, comps, [p.value for p in parts]))
