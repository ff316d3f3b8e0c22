"""
Rewriting between equal positive words, and compiling rewrites into Hurwitz moves.

Two positive words that are equal in B_n are connected by a chain of
single commutation or triple-relation steps through positive words. The
chain found here is turned into a Hurwitz certificate on tuples of frame
generators: a commutation at 0-based position p becomes R_{p+1}, a triple
step becomes R_{p+2} R_{p+1}. Because these certificates only use the
relations among generators, they replay on any frame.
"""

from __future__ import annotations

import dataclasses
import sys
from collections import deque
from typing import Sequence

from .braid_core import BraidWord
from .errors import BudgetExhausted, InapplicableStep, NotEquivalent, StrandMismatch
from .garside import equal, left_divisors
from .hurwitz import Certificate, HurwitzMove, R, Rinv

COMMUTATION = "commutation"
TRIPLE = "triple"
FORWARD = "forward"
BACKWARD = "backward"

DEFAULT_MAX_STATES = 1_000_000
# longest words for which method="auto" still searches; beyond it auto builds greedily
AUTO_BFS_MAX_LENGTH = 20


@dataclasses.dataclass(frozen=True)
class RelationStep:
    position: int
    kind: str
    direction: str = FORWARD

    def __post_init__(self):
        if self.kind not in (COMMUTATION, TRIPLE):
            raise ValueError(f"unknown relation kind {self.kind!r}")
        if self.direction not in (FORWARD, BACKWARD):
            raise ValueError(f"unknown direction {self.direction!r}")

    def reversed(self) -> RelationStep:
        return RelationStep(self.position, self.kind, BACKWARD if self.direction == FORWARD else FORWARD)


def _applicable(letters: Sequence[int], p: int, kind: str) -> bool:
    if kind == COMMUTATION:
        return p + 1 < len(letters) and abs(letters[p] - letters[p + 1]) > 1
    return p + 2 < len(letters) and letters[p] == letters[p + 2] and abs(letters[p] - letters[p + 1]) == 1


def _rewrite(letters: tuple[int, ...], p: int, kind: str) -> tuple[int, ...]:
    if kind == COMMUTATION:
        return letters[:p] + (letters[p + 1], letters[p]) + letters[p + 2:]
    a, b = letters[p], letters[p + 1]
    return letters[:p] + (b, a, b) + letters[p + 3:]


def apply_relation(pw: BraidWord, step: RelationStep) -> BraidWord:
    if not pw.is_positive():
        raise ValueError("relation steps act on positive words only")
    if step.position < 0 or not _applicable(pw.letters, step.position, step.kind):
        raise InapplicableStep(f"{step.kind} step does not apply at position {step.position} of {pw.to_text()!r}")
    return BraidWord(pw.n, _rewrite(pw.letters, step.position, step.kind))


def replay_steps(pw: BraidWord, steps: Sequence[RelationStep]) -> BraidWord:
    for s in steps:
        pw = apply_relation(pw, s)
    return pw


def _neighbours(letters: tuple[int, ...]):
    # positions ascending, commutation before triple
    for p in range(len(letters) - 1):
        if abs(letters[p] - letters[p + 1]) > 1:
            yield p, COMMUTATION, _rewrite(letters, p, COMMUTATION)
        if _applicable(letters, p, TRIPLE):
            yield p, TRIPLE, _rewrite(letters, p, TRIPLE)


def _check_pair(pw1: BraidWord, pw2: BraidWord) -> None:
    if pw1.n != pw2.n:
        raise StrandMismatch(f"strand counts differ: {pw1.n} vs {pw2.n}")
    if not (pw1.is_positive() and pw2.is_positive()):
        raise ValueError("rewrite paths connect positive words only")
    if len(pw1) != len(pw2) or not equal(pw1, pw2):
        raise NotEquivalent(f"{pw1.to_text()!r} and {pw2.to_text()!r} are different braids")


def _bfs_path(w1: tuple[int, ...], w2: tuple[int, ...], max_states: int) -> list[RelationStep]:
    # parent[side][word] = (neighbour word, position, kind); steps are involutions on words
    parent: list[dict] = [{w1: None}, {w2: None}]
    frontier = [deque([w1]), deque([w2])]
    while frontier[0] and frontier[1]:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        other = 1 - side
        nxt: deque = deque()
        for word in frontier[side]:
            for p, kind, new in _neighbours(word):
                if new in parent[side]:
                    continue
                parent[side][new] = (word, p, kind)
                if new in parent[other]:
                    return _bfs_join(parent, side, new)
                nxt.append(new)
            if len(parent[0]) + len(parent[1]) > max_states:
                raise BudgetExhausted(f"rewrite search exceeded {max_states} states")
        frontier[side] = nxt
    raise AssertionError("positive rewrite classes must connect equal words")


def _bfs_join(parent: list[dict], side: int, meet: tuple[int, ...]) -> list[RelationStep]:
    def trail(s: int) -> list[tuple[int, str]]:
        out = []
        w = meet
        while parent[s][w] is not None:
            prev, p, kind = parent[s][w]
            out.append((p, kind))
            w = prev
        return out

    head = trail(0)[::-1]  # from w1 towards meet
    tail = trail(1)  # from meet towards w2
    return [RelationStep(p, k, FORWARD) for p, k in head] + [RelationStep(p, k, BACKWARD) for p, k in tail]


def _greedy_path(w1: tuple[int, ...], w2: tuple[int, ...], n: int) -> list[RelationStep]:
    """Match w2 letter by letter, pulling each required letter to the front of the remaining suffix."""
    steps: list[RelationStep] = []
    current = list(w1)

    def divides(suffix: list[int], a: int) -> bool:
        return a in left_divisors(BraidWord(n, tuple(suffix)))

    def pull(start: int, a: int) -> None:
        # precondition: s_a left-divides current[start:]
        x = current[start]
        if x == a:
            return
        pull(start + 1, a)
        if abs(x - a) > 1:
            kind = COMMUTATION
        else:
            pull(start + 2, x)
            kind = TRIPLE
        tup = tuple(current)
        current[:] = _rewrite(tup, start, kind)
        steps.append(RelationStep(start, kind))

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(w1) + 100))
    try:
        for t, a in enumerate(w2):
            if current[t] != a:
                assert divides(current[t:], a)
                pull(t, a)
    finally:
        sys.setrecursionlimit(limit)
    return steps


def rewrite_path(
    pw1: BraidWord,
    pw2: BraidWord,
    *,
    method: str = "bfs",
    max_states: int = DEFAULT_MAX_STATES,
) -> list[RelationStep]:
    """
    Relation steps turning ``pw1`` into ``pw2`` letter for letter.

    ``method="bfs"`` runs a bidirectional breadth-first search over the
    positive words of the class and raises :class:`BudgetExhausted` past
    ``max_states``. ``method="greedy"`` builds the path directly by pulling
    the letters of ``pw2`` to the front one at a time; it needs no state
    budget and scales to long words, at the price of longer paths.
    ``method="auto"`` searches up to ``AUTO_BFS_MAX_LENGTH`` letters and
    builds greedily beyond that.
    """
    _check_pair(pw1, pw2)
    if pw1.letters == pw2.letters:
        return []
    if method == "auto":
        method = "bfs" if len(pw1) <= AUTO_BFS_MAX_LENGTH else "greedy"
    if method == "bfs":
        return _bfs_path(pw1.letters, pw2.letters, max_states)
    if method == "greedy":
        return _greedy_path(pw1.letters, pw2.letters, pw1.n)
    raise ValueError(f"unknown method {method!r}")


def step_to_moves(step: RelationStep) -> list[HurwitzMove]:
    """Hurwitz moves reproducing one relation step on a tuple of generators."""
    p = step.position
    if step.kind == COMMUTATION:
        return [R(p + 1)] if step.direction == FORWARD else [Rinv(p + 1)]
    if step.direction == FORWARD:
        return [R(p + 2), R(p + 1)]
    return [Rinv(p + 1), Rinv(p + 2)]


def positive_he_certificate(
    indices1: Sequence[int],
    indices2: Sequence[int],
    n: int,
    *,
    method: str = "bfs",
    max_states: int = DEFAULT_MAX_STATES,
) -> Certificate:
    """
    Certificate connecting two tuples of frame generators with equal products.

    The tuples are given as index words and may be realized in any frame.
    """
    w1, w2 = BraidWord(n, tuple(indices1)), BraidWord(n, tuple(indices2))
    if not (w1.is_positive() and w2.is_positive()):
        raise ValueError("index tuples must use positive generator indices")
    if len(w1) != len(w2) or not equal(w1, w2):
        raise NotEquivalent(f"index words {list(indices1)} and {list(indices2)} have different products")
    steps = rewrite_path(w1, w2, method=method, max_states=max_states)
    return Certificate(len(w1), tuple(m for s in steps for m in step_to_moves(s)))
