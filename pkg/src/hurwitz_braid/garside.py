"""
Left normal form in B_n and the decompositions built on it.

Every braid is written uniquely as Δ^r A_1 ... A_k where each A_i is a
permutation braid other than 1 and Δ, and every adjacent pair is
left-weighted: the left descent set of A_{i+1} is contained in the right
descent set of A_i.

Internally a permutation braid is an *arrangement*: a 0-based tuple whose
entry at position p names the strand that ends at position p when the
generators are read left to right as adjacent transpositions of positions.
With that encoding

* right multiplication by s_i swaps positions i-1 and i,
* s_i is a right divisor iff ``arr[i-1] > arr[i]``,
* s_i is a left divisor iff strand i-1 ends to the right of strand i,
* the product A B has arrangement ``A[B[p]]``.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Sequence

from .braid_core import BraidWord, Permutation, half_twist, invert, _check_same_n

Arrangement = tuple[int, ...]


def _identity(n: int) -> Arrangement:
    return tuple(range(n))


def _delta(n: int) -> Arrangement:
    return tuple(range(n - 1, -1, -1))


def _inverse(arr: Arrangement) -> Arrangement:
    inv = [0] * len(arr)
    for p, s in enumerate(arr):
        inv[s] = p
    return tuple(inv)


def _compose(a: Arrangement, b: Arrangement) -> Arrangement:
    return tuple(a[q] for q in b)


def _swap_positions(arr: Arrangement, i: int) -> Arrangement:
    lst = list(arr)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def _swap_values(arr: Arrangement, i: int) -> Arrangement:
    return tuple(i if v == i - 1 else i - 1 if v == i else v for v in arr)


@functools.lru_cache(maxsize=None)
def _tau(arr: Arrangement) -> Arrangement:
    """Conjugation by Δ: s_i <-> s_{n-i}."""
    n = len(arr)
    return tuple(n - 1 - arr[n - 1 - p] for p in range(n))


@functools.lru_cache(maxsize=None)
def right_descents(arr: Arrangement) -> frozenset[int]:
    return frozenset(i for i in range(1, len(arr)) if arr[i - 1] > arr[i])


@functools.lru_cache(maxsize=None)
def left_descents(arr: Arrangement) -> frozenset[int]:
    inv = _inverse(arr)
    return frozenset(i for i in range(1, len(arr)) if inv[i - 1] > inv[i])


@functools.lru_cache(maxsize=None)
def _generator_arr(n: int, i: int) -> Arrangement:
    return _swap_positions(_identity(n), i)


@functools.lru_cache(maxsize=None)
def _inverse_generator_arr(n: int, i: int) -> Arrangement:
    # s_i^-1 = X Δ^-1 with X = s_i^-1 Δ, so arr_X = s_i o reverse
    return _compose(_generator_arr(n, i), _delta(n))


@functools.lru_cache(maxsize=1 << 18)
def _normalize_pair(a: Arrangement, b: Arrangement) -> tuple[Arrangement, Arrangement]:
    """Move letters from the front of b to the back of a until (a, b) is left-weighted."""
    while True:
        movable = left_descents(b) - right_descents(a)
        if not movable:
            return a, b
        i = min(movable)
        a = _swap_positions(a, i)
        b = _swap_values(b, i)


def arrangement_word(arr: Arrangement) -> tuple[int, ...]:
    """A reduced positive word for a permutation braid."""
    letters: list[int] = []
    arr = tuple(arr)
    while True:
        descents = right_descents(arr)
        if not descents:
            break
        i = min(descents)
        letters.append(i)
        arr = _swap_positions(arr, i)
    return tuple(reversed(letters))


def arrangement_permutation(arr: Arrangement) -> Permutation:
    """The image in S_n, matching :func:`braid_core.permutation_image` of the factor's word."""
    return Permutation(tuple(p + 1 for p in _inverse(arr)))


@dataclasses.dataclass(frozen=True)
class NormalForm:
    n: int
    delta_power: int
    canonical_factors: tuple[Arrangement, ...] = ()

    def permutations(self) -> tuple[Permutation, ...]:
        return tuple(arrangement_permutation(a) for a in self.canonical_factors)

    def is_positive(self) -> bool:
        return self.delta_power >= 0

    def word(self) -> BraidWord:
        """A witness word: Δ^r followed by a reduced word for each factor."""
        d = half_twist(self.n)
        head = d.letters * self.delta_power if self.delta_power >= 0 else invert(d).letters * -self.delta_power
        tail = tuple(x for a in self.canonical_factors for x in arrangement_word(a))
        return BraidWord(self.n, head + tail)

    def is_left_weighted(self) -> bool:
        idn, dl = _identity(self.n), _delta(self.n)
        if any(a in (idn, dl) for a in self.canonical_factors):
            return False
        pairs = zip(self.canonical_factors, self.canonical_factors[1:])
        return all(left_descents(b) <= right_descents(a) for a, b in pairs)


def _factor_sequence(w: BraidWord) -> tuple[int, list[Arrangement]]:
    """Rewrite w as Δ^r times a product of permutation braids (not yet normal)."""
    n = w.n
    negatives_after = 0
    out: list[Arrangement] = []
    for x in reversed(w.letters):
        if x > 0:
            arr = _generator_arr(n, x)
        else:
            # the Δ^-1 of this letter is pushed past the letter itself too
            arr = _inverse_generator_arr(n, -x)
            negatives_after += 1
        if negatives_after % 2:
            arr = _tau(arr)
        out.append(arr)
    out.reverse()
    return -negatives_after, out


def _normalize(n: int, r: int, simples: Sequence[Arrangement]) -> NormalForm:
    idn, dl = _identity(n), _delta(n)
    factors: list[Arrangement] = []
    for s in simples:
        if s == idn:
            continue
        factors.append(s)
        for j in range(len(factors) - 2, -1, -1):
            a, b = _normalize_pair(factors[j], factors[j + 1])
            if (a, b) == (factors[j], factors[j + 1]):
                break
            factors[j], factors[j + 1] = a, b
        while factors and factors[-1] == idn:
            factors.pop()
    lead = 0
    while lead < len(factors) and factors[lead] == dl:
        lead += 1
    return NormalForm(n, r + lead, tuple(factors[lead:]))


@functools.lru_cache(maxsize=1 << 16)
def normal_form(w: BraidWord) -> NormalForm:
    r, simples = _factor_sequence(w)
    return _normalize(w.n, r, simples)


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    """True iff the two words represent the same braid."""
    _check_same_n(w1, w2)
    if w1.letters == w2.letters:
        return True
    return normal_form(w1) == normal_form(w2)


def is_identity(w: BraidWord) -> bool:
    return not w.letters or normal_form(w) == NormalForm(w.n, 0, ())


def left_divisors(w: BraidWord) -> frozenset[int]:
    """Generators i with s_i ≼ w in the positive monoid (w assumed positive)."""
    nf = normal_form(w)
    if nf.delta_power > 0:
        return frozenset(range(1, w.n))
    if nf.delta_power < 0 or not nf.canonical_factors:
        return frozenset()
    return left_descents(nf.canonical_factors[0])


def positive_decomposition(w: BraidWord) -> tuple[int, BraidWord]:
    """Return (r, pbar) with w = Δ^r pbar, pbar positive and r maximal."""
    nf = normal_form(w)
    tail = tuple(x for a in nf.canonical_factors for x in arrangement_word(a))
    return nf.delta_power, BraidWord(w.n, tail)


def positive_conjugator(b: BraidWord) -> BraidWord:
    """
    A positive word q that conjugates exactly like b.

    Positive inputs are returned unchanged. Otherwise b = Δ^r pbar and q is
    Δ^(r+2m) pbar for the smallest m with r + 2m >= 0; the two differ by the
    central element Δ^(2m).
    """
    if b.is_positive():
        return b
    r, pbar = positive_decomposition(b)
    m = max(0, -(r // 2))
    power = r + 2 * m
    return BraidWord(b.n, half_twist(b.n).letters * power + pbar.letters)
