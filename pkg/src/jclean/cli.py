"""``jclean`` command-line front end.

Exit codes: 0 success/clean, 1 certified not clean (check/decompose) or a
failed audit/verification, 2 input error, 3 unsupported, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Optional

from .decomposer import Decomposition, decompose, verify
from .errors import BudgetExceeded, NotClean, ParseError, RingMismatch, Unsupported
from .factorizer import classify_2x2, classify_3x3, sc_factorize
from .matrix import Matrix, charpoly
from .oracle import DEFAULT_BUDGET, audit
from .poly import poly_parse
from .rings import Ring, ring_parse
from .series_lift import series_decompose

EXIT_OK, EXIT_NOT_CLEAN, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_BUDGET = range(5)

COMMANDS = ("charpoly", "check", "verify", "decompose", "factor", "lift", "audit")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jclean", description="Strongly J#-clean matrix decompositions.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--ring", required=True, help="ring spec, e.g. Z, Zn:4, Zloc:2, series(Zn:4,2)")
    parser.add_argument("--in", dest="input", help="matrix JSON: a file path or inline JSON")
    parser.add_argument("--poly", help="polynomial text for 'factor', e.g. 't^2+t+2'")
    parser.add_argument("--n", type=int, help="matrix dimension for 'audit'")
    parser.add_argument("--json", action="store_true", help="emit canonical JSON")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--out", help="write output to this path instead of stdout")
    return parser


def _load_json(source: str) -> Any:
    text = source.strip()
    if not text.startswith(("[", "{")):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {source!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _matrix_arg(args, ring: Ring, data: Any = None) -> Matrix:
    if data is None:
        if not args.input:
            raise ParseError(f"'{args.command}' needs --in")
        data = _load_json(args.input)
    return Matrix.from_json(data, ring)


def _is_decomposition(data: Any) -> bool:
    return isinstance(data, dict) and {"A", "E", "W"} <= data.keys()


def _decomposition_json(dec: Decomposition) -> dict:
    out: dict[str, Any] = {
        "A": dec.A.entries_text(),
        "E": dec.E.entries_text(),
        "W": dec.W.entries_text(),
        "charpoly": str(charpoly(dec.A)),
        "ring": dec.A.ring.spec(),
        "verdict": "Clean",
        "verification": dec.verification.to_json(),
        "factorization": _factorization_json(dec.factorization) if dec.factorization else None,
    }
    if dec.components:
        out["components"] = [
            {"ring": c.A.ring.spec(), **_decomposition_json(c)} for c in dec.components
        ]
    if dec.root is not None:
        out["lifted_root"] = {"value": str(dec.root.value), "class": dec.root.residue_class}
    return out


def _factorization_json(fact) -> dict:
    return {
        "h0": str(fact.h0),
        "h1": str(fact.h1),
        "p": fact.p,
        "q": fact.q,
        "u0": str(fact.bezout.u0),
        "u1": str(fact.bezout.u1),
    }


def _human(payload: dict) -> str:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, list) and value and isinstance(value[0], list) and all(
            isinstance(x, str) for row in value for x in row
        ):
            lines.append(f"{key} =")
            width = max(len(x) for row in value for x in row)
            lines.extend("  [" + "  ".join(x.rjust(width) for x in row) + "]" for row in value)
        elif isinstance(value, (dict, list)):
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _cmd_charpoly(args, ring):
    A = _matrix_arg(args, ring)
    chi = charpoly(A)
    return EXIT_OK, {"charpoly": str(chi), "det": str(A.det()), "ring": ring.spec(), "trace": str(A.trace())}


def _cmd_verify(args, ring, data=None):
    data = _load_json(args.input) if data is None else data
    if not _is_decomposition(data):
        raise ParseError("verify expects a decomposition object with 'A', 'E' and 'W'")
    if "ring" in data and ring_parse(str(data["ring"])) != ring:
        raise ParseError(f"decomposition ring {data['ring']} does not match {ring.spec()}")
    A, E, W = (Matrix.from_json(data[k], ring) for k in ("A", "E", "W"))
    if not (A.n == E.n == W.n):
        raise ParseError("A, E and W must have the same size")
    report = verify(A, E, W)
    code = EXIT_OK if report.passed else EXIT_NOT_CLEAN
    return code, {"ring": ring.spec(), "verification": report.to_json()}


def _cmd_check(args, ring):
    if not args.input:
        raise ParseError("'check' needs --in")
    data = _load_json(args.input)
    if _is_decomposition(data):
        return _cmd_verify(args, ring, data)
    A = _matrix_arg(args, ring, data)
    if A.n in (2, 3):
        cls = (classify_2x2 if A.n == 2 else classify_3x3)(A)
        payload = {"ring": ring.spec(), **cls.to_json()}
        if cls.is_clean is None:
            return EXIT_UNSUPPORTED, payload
        return (EXIT_OK if cls.is_clean else EXIT_NOT_CLEAN), payload
    try:
        dec = decompose(A)
    except NotClean as exc:
        return EXIT_NOT_CLEAN, {"ring": ring.spec(), "verdict": "NotClean", "reason": str(exc)}
    fact = dec.factorization
    payload = {"ring": ring.spec(), "verdict": "Clean"}
    if fact is not None:
        payload.update(p=fact.p, q=fact.q)
    return EXIT_OK, payload


def _cmd_decompose(args, ring):
    A = _matrix_arg(args, ring)
    try:
        dec = decompose(A)
    except NotClean as exc:
        return EXIT_NOT_CLEAN, {"ring": ring.spec(), "verdict": "NotClean", "reason": str(exc)}
    return EXIT_OK, _decomposition_json(dec)


def _cmd_lift(args, ring):
    A = _matrix_arg(args, ring)
    try:
        dec = series_decompose(A)
    except NotClean as exc:
        return EXIT_OK, {"ring": ring.spec(), "verdict": "NotClean", "reason": str(exc)}
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return EXIT_OK, _decomposition_json(dec)


def _cmd_factor(args, ring):
    if not args.poly:
        raise ParseError("'factor' needs --poly")
    h = poly_parse(ring, args.poly)
    if not h.is_monic() or h.degree < 1:
        raise ParseError(f"{h} is not monic of degree >= 1")
    try:
        fact = sc_factorize(h)
    except NotClean as exc:
        return EXIT_OK, {"poly": str(h), "ring": ring.spec(), "verdict": "NoFactorization", "reason": str(exc)}
    return EXIT_OK, {"poly": str(h), "ring": ring.spec(), "verdict": "Factorization", **_factorization_json(fact)}


def _cmd_audit(args, ring):
    if args.n is None or args.n < 1:
        raise ParseError("'audit' needs --n >= 1")
    report = audit(ring, args.n, budget=args.budget)
    return (EXIT_OK if not report.disagreements else EXIT_NOT_CLEAN), report.to_json()


HANDLERS = {
    "charpoly": _cmd_charpoly,
    "check": _cmd_check,
    "verify": _cmd_verify,
    "decompose": _cmd_decompose,
    "factor": _cmd_factor,
    "lift": _cmd_lift,
    "audit": _cmd_audit,
}


def run(argv: list[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        ring = ring_parse(args.ring)
        code, payload = HANDLERS[args.command](args, ring)
    except (ParseError, RingMismatch) as exc:
        print(f"jclean: input error: {exc}", file=stderr)
        return EXIT_INPUT
    except Unsupported as exc:
        print(f"jclean: unsupported: {exc}", file=stderr)
        return EXIT_UNSUPPORTED
    except BudgetExceeded as exc:
        print(f"jclean: budget exceeded: {exc}", file=stderr)
        return EXIT_BUDGET
    text = json.dumps(payload, sort_keys=True, indent=2) if args.json else _human(payload)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text, file=stdout)
    return code


def main(argv: Optional[list[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
