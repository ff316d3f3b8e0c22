"""
Frames and the certificate generators for factorizations of the full twist.

A frame is stored as a conjugator b and denotes (X_1[b], ..., X_{n-1}[b])
with X_i the standard generators and a[b] = b^-1 a b. Conjugation by b is
an automorphism of B_n, and Hurwitz moves commute with applying an
automorphism entry-wise, so a certificate built on the standard frame
replays unchanged over every frame.

Certificates produced here are checked by replay against their declared
endpoints before they are returned.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Any, Sequence

from .braid_core import (
    BraidWord,
    conjugate,
    delta_squared_indices,
    delta_squared_word,
    generator,
    invert,
    concat,
    standard_pi,
)
from .errors import CertificateError, NotEquivalent, ParseError, StrandMismatch
from .garside import equal, positive_conjugator
from .hurwitz import (
    Certificate,
    Factorization,
    HurwitzMove,
    R,
    Rinv,
    chain,
    empty_certificate,
    first_mismatch,
    replay,
    verify_certificate,
)
from .rewrite import DEFAULT_MAX_STATES, positive_he_certificate


@dataclasses.dataclass(frozen=True)
class Frame:
    n: int
    conjugator: BraidWord = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.conjugator is None:
            object.__setattr__(self, "conjugator", BraidWord(self.n, ()))
        elif self.conjugator.n != self.n:
            raise StrandMismatch(f"conjugator lives in B_{self.conjugator.n}, frame in B_{self.n}")

    @classmethod
    def standard(cls, n: int) -> Frame:
        return cls(n, BraidWord(n, ()))

    def element(self, i: int) -> BraidWord:
        if not 1 <= i < self.n:
            raise IndexError(f"frame index {i} outside 1..{self.n - 1}")
        return conjugate(generator(self.n, i), self.conjugator)

    def same_as(self, other: Frame) -> bool:
        """Element-wise equality; distinct conjugators may give the same frame."""
        if self.n != other.n:
            return False
        return all(equal(a, b) for a, b in zip(frame_elements(self), frame_elements(other)))


def frame_elements(fr: Frame) -> list[BraidWord]:
    return [fr.element(i) for i in range(1, fr.n)]


@dataclasses.dataclass(frozen=True)
class FrameFactorization:
    frame: Frame
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        for i in indices:
            if not 1 <= i < self.frame.n:
                raise ValueError(f"index {i} outside 1..{self.frame.n - 1}")
        object.__setattr__(self, "indices", indices)

    @property
    def n(self) -> int:
        return self.frame.n

    def index_word(self) -> BraidWord:
        return BraidWord(self.n, self.indices)

    def is_delta_squared(self) -> bool:
        return equal(self.index_word(), delta_squared_word(self.n))

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "conjugator": list(self.frame.conjugator.letters), "indices": list(self.indices)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> FrameFactorization:
        try:
            n = int(data["n"])
            b = BraidWord(n, tuple(data.get("conjugator", ())))
            return cls(Frame(n, b), tuple(data["indices"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad frame factorization payload: {exc}") from None


def realize(ff: FrameFactorization) -> Factorization:
    elements = frame_elements(ff.frame)
    return Factorization(ff.n, tuple(elements[i - 1] for i in ff.indices))


def standard_pattern(fr: Frame) -> FrameFactorization:
    """(F_1 ... F_{n-1})^n over the given frame."""
    return FrameFactorization(fr, delta_squared_indices(fr.n))


def _require(f1: Factorization, f2: Factorization, c: Certificate, what: str) -> Certificate:
    verdict = verify_certificate(f1, f2, c)
    if not verdict:
        raise CertificateError(f"{what}: {verdict.detail}")
    return c


def same_frame_certificate(
    ff1: FrameFactorization,
    ff2: FrameFactorization,
    *,
    method: str = "auto",
    max_states: int = DEFAULT_MAX_STATES,
) -> Certificate:
    """Connect two full-twist factorizations over one frame by rewriting their index words."""
    if not ff1.frame.same_as(ff2.frame):
        raise ValueError("same_frame_certificate needs both factorizations over one frame")
    for ff in (ff1, ff2):
        if not ff.is_delta_squared():
            raise NotEquivalent(f"index word {list(ff.indices)} does not multiply to the full twist")
    return positive_he_certificate(ff1.indices, ff2.indices, ff1.n, method=method, max_states=max_states)


@functools.lru_cache(maxsize=None)
def pi_shift_certificate(i: int, n: int) -> Certificate:
    """X_i . Pi  ~  Pi . X_{i-1} on tuples of length n, where Pi = X_1 ... X_{n-1}."""
    if not 1 < i <= n - 1:
        raise ValueError(f"need 1 < i <= n-1, got i={i}, n={n}")
    pi = standard_pi(n)
    return positive_he_certificate((i,) + pi, pi + (i - 1,), n, method="auto")


@functools.lru_cache(maxsize=None)
def pi2_shift_certificate(n: int) -> Certificate:
    """
    X_1 . Pi . Pi  ~  Pi . Pi . X_{n-1} on tuples of length 2n-1.

    Writes the second Pi out as X_1 ... X_{n-1} and walks the first Pi
    rightwards with Pi X_s ~ X_{s+1} Pi, for s = 1, ..., n-2.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    length = 2 * n - 1
    parts = [pi_shift_certificate(s + 1, n).reversed().shifted(s, length) for s in range(1, n - 1)]
    return chain(length, parts)


class _Schedule:
    """Accumulates a certificate stage by stage and replays each stage against its expected tuple."""

    def __init__(self, start: Factorization, check: bool):
        self.length = len(start)
        self.current = start
        self.moves: list[HurwitzMove] = []
        self.check = check

    def stage(self, name: str, moves: Sequence[HurwitzMove] | Certificate, expected: Factorization | None = None):
        cert = moves if isinstance(moves, Certificate) else Certificate(self.length, tuple(moves))
        self.moves.extend(cert.moves)
        if self.check:
            self.current = replay(self.current, cert)
            if expected is not None:
                i = first_mismatch(self.current, expected)
                if i is not None:
                    raise CertificateError(f"stage {name!r} disagrees with its expected tuple at entry {i}")

    def certificate(self) -> Certificate:
        return Certificate(self.length, tuple(self.moves))


def _over(n: int, pattern: Sequence[BraidWord]) -> Factorization:
    return Factorization(n, tuple(pattern))


def _one_conj_moves(j: int, n: int, check: bool) -> Certificate:
    L = n - 1
    N = n * L
    X = [None] + [generator(n, i) for i in range(1, n)]
    A = [None] + [conjugate(X[i], X[j]) for i in range(1, n)]
    start = _over(n, [X[i] for i in delta_squared_indices(n)])
    target = _over(n, [A[i] for i in delta_squared_indices(n)])
    conj_frame = Frame(n, generator(n, j))
    sched = _Schedule(start, check)

    if n == 2:
        return empty_certificate(N)

    if j == n - 1:
        # (X_{n-2}, X_{n-1}) -> (X_{n-1}, A_{n-2}) inside every block
        block = list(range(1, n - 2)) + [n - 1, n - 2]
        sched.stage("block swaps", [Rinv(m * L + j - 1) for m in range(n)],
                    _over(n, [A[i] for i in block] * n))
        sched.stage("same frame", same_frame_certificate(
            FrameFactorization(conj_frame, tuple(block) * n), standard_pattern(conj_frame)), target)
        return sched.certificate()

    if j == 1:
        # reorder each block to X_2 X_1 X_3 ... first, so that R^-1 meets (X_2, X_1)
        block = [2, 1] + list(range(3, n))
        sched.stage("reorder", same_frame_certificate(
            standard_pattern(Frame.standard(n)), FrameFactorization(Frame.standard(n), tuple(block) * n)),
            _over(n, [X[i] for i in block] * n))
        sched.stage("block swaps", [Rinv(m * L + 1) for m in range(n)], target)
        return sched.certificate()

    # interior case 1 < j < n-1
    head = [X[i] for i in range(1, j - 1)]
    tail = [X[i] for i in range(j + 2, n)]
    sched.stage("block swaps", [Rinv(m * L + j - 1) for m in range(n)],
                _over(n, (head + [X[j], A[j - 1], X[j + 1]] + tail) * n))

    # X_j to the front of each block, past X_{j-2}, ..., X_1
    sched.stage("lead X_j", [R(m * L + k) for m in range(n) for k in range(j - 2, 0, -1)],
                _over(n, ([X[j]] + head + [A[j - 1], X[j + 1]] + tail) * n))

    # leading X_j of blocks 2..n back into the previous block, just after X_{j+1}
    rest = head + [A[j - 1], X[j + 1]]
    sched.stage("regroup X_j", [R(m * L - t) for m in range(1, n) for t in range(0, n - j - 2)],
                _over(n, [X[j]] + (rest + [X[j]] + tail) * (n - 1) + rest + tail))

    # (X_{j+1}, X_j) -> (X_j, A_{j+1})
    pi_a = [A[i] for i in range(1, n)]
    trailer = [A[i] for i in range(1, j)] + [X[j + 1]] + [A[i] for i in range(j + 2, n)]
    sched.stage("conjugate X_{j+1}", [Rinv(j + 1 + m * L) for m in range(n - 1)],
                _over(n, [A[j]] + pi_a * (n - 1) + trailer))

    # A_j Pi^{n-1} -> Pi^{j-1} A_1 Pi^{n-j}
    shifts = [pi_shift_certificate(j - t, n).shifted(t * L, N) for t in range(j - 1)]
    sched.stage("shift down", chain(N, shifts),
                _over(n, pi_a * (j - 1) + [A[1]] + pi_a * (n - j) + trailer))

    # A_1 Pi Pi -> Pi Pi A_{n-1}
    sched.stage("double shift", pi2_shift_certificate(n).shifted((j - 1) * L, N),
                _over(n, pi_a * (j + 1) + [A[n - 1]] + pi_a * (n - j - 2) + trailer))

    # A_{n-1} Pi^{n-j-2} -> Pi^{n-j-2} A_{j+1}
    shifts = [pi_shift_certificate(n - 1 - t, n).shifted((j + 1 + t) * L, N) for t in range(n - j - 2)]
    sched.stage("shift up", chain(N, shifts),
                _over(n, pi_a * (n - 1) + [A[j + 1]] + trailer))

    # A_{j+1} past A_1, ..., A_{j-1}
    base = (n - 1) * L
    sched.stage("commute A_{j+1}", [R(base + t) for t in range(1, j)],
                _over(n, pi_a * (n - 1) + [A[i] for i in range(1, j)] + [A[j + 1], X[j + 1]]
                      + [A[i] for i in range(j + 2, n)]))

    # (A_{j+1}, X_{j+1}) -> (A_{j+1} X_{j+1} A_{j+1}^-1, A_{j+1}) = (A_j, A_{j+1})
    sched.stage("final move", [R(base + j)], target)
    return sched.certificate()


@functools.lru_cache(maxsize=None)
def one_conj_certificate(j: int, n: int, check: bool = True) -> Certificate:
    """
    Certificate taking (X_1 ... X_{n-1})^n to (X_1[X_j] ... X_{n-1}[X_j])^n.

    The move schedule has three shapes: j = n-1, j = 1, and the interior
    case. With ``check`` set, every stage is replayed against the tuple it is
    supposed to produce.
    """
    if not 1 <= j <= n - 1:
        raise ValueError(f"need 1 <= j <= n-1, got j={j}, n={n}")
    cert = _one_conj_moves(j, n, check)
    if check:
        _require(realize(standard_pattern(Frame.standard(n))),
                 realize(standard_pattern(Frame(n, generator(n, j)))), cert, f"one_conj(j={j}, n={n})")
    return cert


def conj_certificate(b: BraidWord, n: int | None = None, *, check: bool = True) -> Certificate:
    """
    Certificate taking (X_1 ... X_{n-1})^n to (X_1[b] ... X_{n-1}[b])^n.

    b is first replaced by a positive word y_1 ... y_d conjugating the same
    way. Running the one-generator certificate for y_d, then y_{d-1}, ...,
    then y_1 accumulates the conjugator y_1 ... y_d: over a frame with
    conjugator c, the certificate for y produces the frame with conjugator y c.
    """
    n = b.n if n is None else n
    if b.n != n:
        raise StrandMismatch(f"conjugator lives in B_{b.n}, requested B_{n}")
    N = n * (n - 1)
    q = positive_conjugator(b)
    cert = chain(N, [one_conj_certificate(y, n) for y in reversed(q.letters)])
    if check:
        _require(realize(standard_pattern(Frame.standard(n))),
                 realize(standard_pattern(Frame(n, b))), cert, f"conj({b.to_text()!r})")
    return cert


def main_theorem_certificate(
    ff1: FrameFactorization,
    ff2: FrameFactorization,
    *,
    method: str = "auto",
    max_states: int = DEFAULT_MAX_STATES,
) -> Certificate:
    """
    Certificate connecting two full-twist factorizations over arbitrary frames.

    Rewrites ff1 to the standard pattern over its frame, moves between the
    frames with the conjugator c = b2 b1^-1 (so that F_i[b1][c] = F_i[b2]),
    and finishes with the reverse of the rewrite of ff2.
    """
    if ff1.n != ff2.n:
        raise StrandMismatch(f"strand counts differ: {ff1.n} vs {ff2.n}")
    n = ff1.n
    for ff in (ff1, ff2):
        if len(ff.indices) != n * (n - 1) or not ff.is_delta_squared():
            raise NotEquivalent(f"index word {list(ff.indices)} does not multiply to the full twist")
    N = n * (n - 1)
    fr1, fr2 = ff1.frame, ff2.frame
    if fr1.same_as(fr2):
        cert = same_frame_certificate(ff1, ff2, method=method, max_states=max_states)
        return _require(realize(ff1), realize(ff2), cert, "main theorem endpoints")
    to_std1 = same_frame_certificate(ff1, standard_pattern(fr1), method=method, max_states=max_states)
    to_std2 = same_frame_certificate(ff2, standard_pattern(fr2), method=method, max_states=max_states)
    bridge = conj_certificate(concat(fr2.conjugator, invert(fr1.conjugator)), n, check=False)
    cert = chain(N, [to_std1, bridge, to_std2.reversed()])
    return _require(realize(ff1), realize(ff2), cert, "main theorem endpoints")
