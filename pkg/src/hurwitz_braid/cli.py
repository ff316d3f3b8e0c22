"""
Command-line front end.

Exit codes: 0 ok, 1 verification failed (or no certificate found by
``orbit``), 2 input error, 3 not equivalent, 4 search budget exhausted.

Words are quoted strings of signed integers. Structured inputs are JSON,
given as a file path, ``-`` for stdin, or an inline object.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .braid_core import BraidWord, word_from_text
from .errors import BudgetExhausted, NotEquivalent, ParseError, StrandMismatch
from .frames import (
    FrameFactorization,
    conj_certificate,
    main_theorem_certificate,
    one_conj_certificate,
    realize,
    same_frame_certificate,
)
from .garside import equal, normal_form
from .hurwitz import Certificate, Factorization, orbit_search, verify_certificate
from .rewrite import DEFAULT_MAX_STATES

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_NOT_EQUIVALENT = 3
EXIT_BUDGET = 4


class InputError(Exception):
    pass


_stdin_cache: str | None = None


def _read_json(source: str) -> Any:
    global _stdin_cache
    text: str
    if source == "-":
        if _stdin_cache is None:
            _stdin_cache = sys.stdin.read()
        text = _stdin_cache
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON ({exc.msg})") from None


def _frame_factorization(source: str) -> FrameFactorization:
    data = _read_json(source)
    if not isinstance(data, dict) or "indices" not in data:
        raise InputError(f"{source}: expected a frame factorization with an 'indices' field")
    return FrameFactorization.from_json(data)


def _factorization(source: str) -> Factorization:
    """Either an explicit factorization ({"n", "entries"}) or a frame factorization, realized."""
    data = _read_json(source)
    if isinstance(data, dict) and "entries" in data:
        return Factorization.from_json(data)
    if isinstance(data, dict) and "indices" in data:
        return realize(FrameFactorization.from_json(data))
    raise InputError(f"{source}: expected a factorization with 'entries' or 'indices'")


def _word(text: str, n: int) -> BraidWord:
    return word_from_text(text, n)


def _emit(obj: Any) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def cmd_nf(args) -> int:
    w = _word(args.word, args.n)
    nf = normal_form(w)
    print(f"delta_power: {nf.delta_power}")
    print(f"factors: {len(nf.canonical_factors)}")
    print(f"word: {nf.word().to_text()}")
    return EXIT_OK


def cmd_eq(args) -> int:
    same = equal(_word(args.w1, args.n), _word(args.w2, args.n))
    print("equal" if same else "not-equal")
    return EXIT_OK if same else EXIT_FAIL


def cmd_certify(args) -> int:
    opts = {"method": args.method, "max_states": args.max_states}
    if args.mode == "one-conj":
        if args.n is None or args.j is None:
            raise InputError("one-conj needs --n and --j")
        cert = one_conj_certificate(args.j, args.n)
    elif args.mode == "conj":
        if args.n is None or args.word is None:
            raise InputError("conj needs --n and --word")
        cert = conj_certificate(_word(args.word, args.n), args.n)
    else:
        if len(args.inputs) != 2:
            raise InputError(f"{args.mode} needs two frame factorization inputs")
        ff1, ff2 = (_frame_factorization(s) for s in args.inputs)
        if ff1.n != ff2.n:
            raise InputError(f"strand counts differ: {ff1.n} vs {ff2.n}")
        if args.mode == "same-frame":
            cert = same_frame_certificate(ff1, ff2, **opts)
        else:
            cert = main_theorem_certificate(ff1, ff2, **opts)
    _emit(cert.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    f1, f2 = _factorization(args.f1), _factorization(args.f2)
    cert = Certificate.from_json(_read_json(args.certificate))
    if f1.n != f2.n:
        raise InputError(f"strand counts differ: {f1.n} vs {f2.n}")
    if len(f1) != len(f2) or cert.source_length != len(f1):
        raise InputError(f"length mismatch: {len(f1)}, {len(f2)}, certificate {cert.source_length}")
    verdict = verify_certificate(f1, f2, cert)
    if verdict:
        print("ok")
        return EXIT_OK
    print(f"fail: first differing entry {verdict.mismatch}")
    print(verdict.detail)
    return EXIT_FAIL


def cmd_orbit(args) -> int:
    f1, f2 = _factorization(args.f1), _factorization(args.f2)
    if f1.n != f2.n or len(f1) != len(f2):
        raise InputError("factorizations must share strand count and length")
    cert = orbit_search(f1, f2, max_depth=args.max_depth, max_states=args.max_states)
    if cert is None:
        print("not-found")
        return EXIT_FAIL
    _emit(cert.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-braid",
        description="Braid group normal forms and Hurwitz-equivalence certificates for full-twist factorizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="left normal form of a word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("eq", help="decide equality of two words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("certify", help="emit a certificate as JSON")
    p.add_argument("mode", choices=["same-frame", "one-conj", "conj", "main"])
    p.add_argument("inputs", nargs="*", help="frame factorization JSON (same-frame, main)")
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int, help="generator index (one-conj)")
    p.add_argument("--word", help="conjugator word (conj)")
    p.add_argument("--method", choices=["auto", "bfs", "greedy"], default="auto")
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="replay a certificate and compare endpoints")
    p.add_argument("f1")
    p.add_argument("f2")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="search the Hurwitz orbit for a certificate")
    p.add_argument("f1")
    p.add_argument("f2")
    p.add_argument("--max-depth", type=int, default=6)
    p.add_argument("--max-states", type=int, default=200_000)
    p.set_defaults(func=cmd_orbit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    global _stdin_cache
    _stdin_cache = None
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ParseError, StrandMismatch, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotEquivalent as exc:
        print(f"not-equivalent: {exc}", file=sys.stderr)
        return EXIT_NOT_EQUIVALENT
    except BudgetExhausted as exc:
        print(f"budget-exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
