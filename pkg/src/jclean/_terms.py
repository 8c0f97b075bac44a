"""Shared reader/writer for ``c0 + c1*x + c2*x^2``-style sums of monomials.

Used for truncated-series literals (variable ``x``) and polynomial text
(variable ``t``).  Compound coefficients are written in parentheses.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, TypeVar

from .errors import ParseError

C = TypeVar("C")


def split_signed(text: str) -> list[tuple[int, str]]:
    """Split ``text`` at top-level ``+``/``-`` into ``(sign, body)`` pieces."""
    pieces: list[tuple[int, str]] = []
    depth = 0
    sign = 1
    current: list[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced ')' in {text!r}")
        if depth == 0 and ch in "+-":
            body = "".join(current).strip()
            if body:
                if body[-1] in "*^/":
                    raise ParseError(f"dangling operator before {ch!r} in {text!r}")
                pieces.append((sign, body))
                sign = 1 if ch == "+" else -1
                current = []
            elif ch == "-":
                sign = -sign
            continue
        current.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced '(' in {text!r}")
    body = "".join(current).strip()
    if not body:
        raise ParseError(f"empty term in {text!r}")
    pieces.append((sign, body))
    return pieces


def strip_parens(text: str) -> str:
    text = text.strip()
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        for i, ch in enumerate(text):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(text) - 1:
                return text
        text = text[1:-1].strip()
    return text


def parse_terms(
    text: str,
    var: str,
    parse_coeff: Callable[[str], C],
    negate: Callable[[C], C],
) -> list[tuple[int, C]]:
    """Read a signed sum of ``coef*var^k`` terms; repeated degrees are kept."""
    if not text.strip():
        raise ParseError("empty literal")
    tail = re.compile(r"(?:\*\s*)?" + re.escape(var) + r"\s*(?:\^\s*(\d+))?\s*$")
    out: list[tuple[int, C]] = []
    for sign, body in split_signed(text):
        m = tail.search(body)
        if m and "(" not in m.group(0) and balanced(body[: m.start()]):
            degree = int(m.group(1)) if m.group(1) is not None else 1
            coeff_text = body[: m.start()].strip()
            if coeff_text.endswith("*"):
                raise ParseError(f"malformed term {body.strip()!r}")
            coeff = parse_coeff(strip_parens(coeff_text) if coeff_text else "1")
        else:
            degree = 0
            coeff = parse_coeff(strip_parens(body))
        out.append((degree, negate(coeff) if sign < 0 else coeff))
    return out


def balanced(text: str) -> bool:
    depth = 0
    for ch in text:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def _is_compound(text: str) -> bool:
    body = text[1:] if text.startswith("-") else text
    return any(ch in body for ch in "+-*x(")


def format_terms(items: Iterable[tuple[int, str]], var: str) -> str:
    """Render ``(degree, coefficient-text)`` pairs, skipping zero coefficients."""
    items = [(d, c) for d, c in items if c != "0"]
    if len(items) == 1 and items[0][0] == 0:
        return items[0][1]
    parts: list[str] = []
    for degree, coeff in items:
        if coeff == "0":
            continue
        negative = False
        if _is_compound(coeff):
            coeff = f"({coeff})"
        elif coeff.startswith("-"):
            negative, coeff = True, coeff[1:]
        if degree == 0:
            mono = coeff
        else:
            power = var if degree == 1 else f"{var}^{degree}"
            mono = power if coeff == "1" else f"{coeff}*{power}"
        if not parts:
            parts.append(f"-{mono}" if negative else mono)
        else:
            parts.append(f" - {mono}" if negative else f" + {mono}")
    return "".join(parts) if parts else "0"
