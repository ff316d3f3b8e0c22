"""
Hurwitz moves on tuples of braids, certificates, and a bounded orbit search.

The move R_k replaces the adjacent entries (t_k, t_{k+1}) by
(t_k t_{k+1} t_k^-1, t_k); its inverse gives (t_{k+1}, t_{k+1}^-1 t_k t_{k+1}).
Both leave the product of the tuple unchanged. Positions are 1-based.
"""

from __future__ import annotations

import dataclasses
import json
from collections import deque
from typing import Any, Iterable, Sequence

from .braid_core import BraidWord, concat, free_reduce, invert
from .errors import BudgetExhausted, NotEquivalent, ParseError, StrandMismatch
from .garside import equal, normal_form

FWD = "fwd"
INV = "inv"


@dataclasses.dataclass(frozen=True)
class Factorization:
    n: int
    entries: tuple[BraidWord, ...] = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        for e in entries:
            if e.n != self.n:
                raise StrandMismatch(f"entry {e} does not live in B_{self.n}")
        object.__setattr__(self, "entries", tuple(free_reduce(e) for e in entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def product(self) -> BraidWord:
        if not self.entries:
            return BraidWord(self.n, ())
        return concat(*self.entries)

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "entries": [list(e.letters) for e in self.entries]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Factorization:
        try:
            n = int(data["n"])
            return cls(n, tuple(BraidWord(n, tuple(e)) for e in data["entries"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad factorization payload: {exc}") from None


@dataclasses.dataclass(frozen=True)
class HurwitzMove:
    k: int
    direction: str = FWD

    def __post_init__(self):
        if self.direction not in (FWD, INV):
            raise ValueError(f"direction must be {FWD!r} or {INV!r}, got {self.direction!r}")

    def inverse(self) -> HurwitzMove:
        return HurwitzMove(self.k, INV if self.direction == FWD else FWD)

    def __str__(self) -> str:
        return f"R{self.k}" + ("" if self.direction == FWD else "^-1")


def R(k: int) -> HurwitzMove:
    return HurwitzMove(k, FWD)


def Rinv(k: int) -> HurwitzMove:
    return HurwitzMove(k, INV)


@dataclasses.dataclass(frozen=True)
class Certificate:
    source_length: int
    moves: tuple[HurwitzMove, ...] = ()

    def __post_init__(self):
        moves = tuple(self.moves)
        for m in moves:
            if not 1 <= m.k < self.source_length:
                raise ValueError(f"move {m} invalid for tuples of length {self.source_length}")
        object.__setattr__(self, "moves", moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __add__(self, other: Certificate) -> Certificate:
        if other.source_length != self.source_length:
            raise ValueError("cannot chain certificates for different tuple lengths")
        return Certificate(self.source_length, self.moves + other.moves)

    def reversed(self) -> Certificate:
        """The certificate that undoes this one."""
        return Certificate(self.source_length, tuple(m.inverse() for m in reversed(self.moves)))

    def shifted(self, offset: int, source_length: int) -> Certificate:
        """Embed into a longer tuple, acting on the window starting after ``offset`` entries."""
        return Certificate(source_length, tuple(HurwitzMove(m.k + offset, m.direction) for m in self.moves))

    def to_json(self) -> dict[str, Any]:
        return {
            "source_length": self.source_length,
            "moves": [{"k": m.k, "dir": m.direction} for m in self.moves],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Certificate:
        try:
            moves = tuple(HurwitzMove(int(m["k"]), m["dir"]) for m in data["moves"])
            return cls(int(data["source_length"]), moves)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad certificate payload: {exc}") from None


def empty_certificate(length: int) -> Certificate:
    return Certificate(length, ())


def chain(length: int, parts: Iterable[Certificate]) -> Certificate:
    moves: list[HurwitzMove] = []
    for c in parts:
        if c.source_length != length:
            raise ValueError(f"certificate for length {c.source_length} in a chain of length {length}")
        moves.extend(c.moves)
    return Certificate(length, tuple(moves))


def _move_entries(entries: list[BraidWord], m: HurwitzMove) -> None:
    i = m.k - 1
    a, b = entries[i], entries[i + 1]
    if m.direction == FWD:
        entries[i], entries[i + 1] = concat(a, b, invert(a)), a
    else:
        entries[i], entries[i + 1] = b, concat(invert(b), a, b)


def apply_move(f: Factorization, m: HurwitzMove) -> Factorization:
    if not 1 <= m.k < len(f):
        raise IndexError(f"move {m} out of range for a tuple of length {len(f)}")
    entries = list(f.entries)
    _move_entries(entries, m)
    return Factorization(f.n, tuple(entries))


def _shorten(w: BraidWord) -> BraidWord:
    alt = normal_form(w).word()
    return alt if len(alt) < len(w) else w


def replay(f: Factorization, c: Certificate, *, compact_above: int | None = 64) -> Factorization:
    """
    Apply the moves of ``c`` left to right.

    Entries longer than ``compact_above`` letters are swapped for their
    normal-form witness when that is shorter; this changes literal words
    but never the braids they denote. Pass ``None`` for purely literal replay.
    """
    if c.source_length != len(f):
        raise ValueError(f"certificate is for length {c.source_length}, tuple has length {len(f)}")
    entries = list(f.entries)
    for m in c.moves:
        _move_entries(entries, m)
        if compact_above is not None:
            for i in (m.k - 1, m.k):
                if len(entries[i]) > compact_above:
                    entries[i] = _shorten(entries[i])
    return Factorization(f.n, tuple(entries))


@dataclasses.dataclass(frozen=True)
class Verdict:
    ok: bool
    mismatch: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def first_mismatch(f1: Factorization, f2: Factorization) -> int | None:
    """Index of the first entry where the tuples differ as braids, or None."""
    for i, (a, b) in enumerate(zip(f1.entries, f2.entries)):
        if not equal(a, b):
            return i
    return None


def verify_certificate(f1: Factorization, f2: Factorization, c: Certificate) -> Verdict:
    """Replay ``c`` on ``f1`` and compare with ``f2`` entry by entry."""
    if f1.n != f2.n:
        return Verdict(False, None, f"strand counts differ: {f1.n} vs {f2.n}")
    if len(f1) != len(f2) or c.source_length != len(f1):
        return Verdict(False, None, f"lengths differ: {len(f1)}, {len(f2)}, certificate {c.source_length}")
    out = replay(f1, c)
    i = first_mismatch(out, f2)
    if i is None:
        return Verdict(True)
    return Verdict(False, i, f"entry {i}: replay gives {out.entries[i].to_text()!r}, expected {f2.entries[i].to_text()!r}")


def _all_moves(length: int) -> list[HurwitzMove]:
    return [m for k in range(1, length) for m in (R(k), Rinv(k))]


def _key(entries: Sequence[BraidWord]) -> tuple:
    return tuple(normal_form(e) for e in entries)


def orbit_search(
    f1: Factorization,
    f2: Factorization,
    max_depth: int = 6,
    max_states: int = 200_000,
) -> Certificate | None:
    """
    Bidirectional breadth-first search for a certificate taking f1 to f2.

    States are deduplicated by the normal forms of their entries. Returns
    None when no connection exists within ``max_depth`` moves; raises
    :class:`BudgetExhausted` once more than ``max_states`` states are held.
    """
    if f1.n != f2.n:
        raise StrandMismatch(f"strand counts differ: {f1.n} vs {f2.n}")
    if len(f1) != len(f2):
        raise ValueError(f"tuple lengths differ: {len(f1)} vs {len(f2)}")
    if not equal(f1.product(), f2.product()):
        raise NotEquivalent("products of the two factorizations differ")
    m = len(f1)
    start, goal = _key(f1.entries), _key(f2.entries)
    if start == goal:
        return empty_certificate(m)
    moves = _all_moves(m)

    # parent maps: key -> (neighbour key, move taking neighbour to this state)
    seen = [{start: None}, {goal: None}]
    words = [{start: list(f1.entries)}, {goal: list(f2.entries)}]
    frontier = [deque([start]), deque([goal])]
    depth = [0, 0]
    if len(seen[0]) + len(seen[1]) > max_states:
        raise BudgetExhausted(f"state budget {max_states} exhausted")

    def path_to(side: int, key) -> list[HurwitzMove]:
        out = []
        while seen[side][key] is not None:
            prev, mv = seen[side][key]
            out.append(mv)
            key = prev
        return out[::-1]

    while depth[0] + depth[1] < max_depth and (frontier[0] or frontier[1]):
        side = 0 if (len(frontier[0]) <= len(frontier[1]) and frontier[0]) or not frontier[1] else 1
        other = 1 - side
        nxt: deque = deque()
        for key in frontier[side]:
            base = words[side][key]
            for mv in moves:
                entries = list(base)
                _move_entries(entries, mv)
                k2 = _key(entries)
                if k2 in seen[side]:
                    continue
                seen[side][k2] = (key, mv)
                words[side][k2] = [_compact(e) for e in entries]
                if k2 in seen[other]:
                    return _join(m, side, path_to(side, k2), path_to(other, k2))
                if len(seen[0]) + len(seen[1]) > max_states:
                    raise BudgetExhausted(f"state budget {max_states} exhausted")
                nxt.append(k2)
        frontier[side] = nxt
        depth[side] += 1
    return None


def _compact(w: BraidWord) -> BraidWord:
    return _shorten(w) if len(w) > 16 else w


def _join(m: int, side: int, this: list[HurwitzMove], that: list[HurwitzMove]) -> Certificate:
    # ``this`` leads from side's root to the meeting state, ``that`` from the other root
    fwd, bwd = (this, that) if side == 0 else (that, this)
    return Certificate(m, tuple(fwd) + tuple(mv.inverse() for mv in reversed(bwd)))
