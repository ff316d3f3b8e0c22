"""
Words in the Artin generators of the braid group B_n.

A word is a tuple of signed 1-based generator indices: ``+i`` stands for the
generator H_i and ``-i`` for its inverse. Words are only ever freely reduced
here; deciding equality in B_n is the job of :mod:`hurwitz_braid.garside`.

Conjugation follows the convention ``a[b] = b^-1 a b``. This is the reading
under which the inverse Hurwitz move sends the adjacent pair (X_{n-2}, X_{n-1})
to (X_{n-1}, X_{n-2}[X_{n-1}]).
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence

from .errors import ParseError, StrandMismatch


@dataclasses.dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"strand count must be at least 2, got {self.n}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.n:
                raise ValueError(f"letter {x} out of range for B_{self.n}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else invert(self)
        return free_reduce(BraidWord(self.n, base.letters * abs(k)))

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def to_text(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __str__(self) -> str:
        return f"B{self.n}[{self.to_text()}]"


def generator(n: int, i: int) -> BraidWord:
    return BraidWord(n, (i,))


def word_from_text(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated signed integers into a word of B_n (unreduced)."""
    letters = []
    for token in text.split():
        try:
            x = int(token)
        except ValueError:
            raise ParseError(f"token {token!r} is not an integer") from None
        if x == 0 or abs(x) >= n:
            raise ParseError(f"token {token!r} out of range: generator indices must lie in 1..{n - 1}")
        letters.append(x)
    return BraidWord(n, tuple(letters))


def _reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def free_reduce(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, _reduce_letters(w.letters))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-x for x in reversed(w.letters)))


def _check_same_n(*words: BraidWord) -> int:
    n = words[0].n
    for w in words[1:]:
        if w.n != n:
            raise StrandMismatch(f"strand counts differ: {n} vs {w.n}")
    return n


def concat(*words: BraidWord) -> BraidWord:
    """Juxtapose words and freely reduce the result."""
    n = _check_same_n(*words)
    return BraidWord(n, _reduce_letters(x for w in words for x in w.letters))


def conjugate(a: BraidWord, b: BraidWord) -> BraidWord:
    """Return a[b] = b^-1 a b, freely reduced."""
    return concat(invert(b), a, b)


def half_twist(n: int) -> BraidWord:
    """The positive half twist (s1)(s2 s1)...(s_{n-1}...s1)."""
    letters: list[int] = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return BraidWord(n, tuple(letters))


def standard_pi(n: int) -> tuple[int, ...]:
    """Index word of X_1 X_2 ... X_{n-1}."""
    return tuple(range(1, n))


def delta_squared_indices(n: int) -> tuple[int, ...]:
    """The index pattern (1, ..., n-1) repeated n times."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return standard_pi(n) * n


def delta_squared_word(n: int) -> BraidWord:
    return BraidWord(n, delta_squared_indices(n))


def delta_squared_factorization(n: int):
    """(X_1, ..., X_{n-1}) repeated n times, one generator per entry."""
    from .hurwitz import Factorization

    return Factorization(n, tuple(generator(n, i) for i in delta_squared_indices(n)))


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}; ``images[x-1]`` is the image of x."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection on 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply self first, then other."""
        return Permutation(tuple(other(self(x)) for x in range(1, self.n + 1)))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def cycle_type(self) -> tuple[int, ...]:
        seen = set()
        lengths = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            length = 0
            x = start
            while x not in seen:
                seen.add(x)
                x = self(x)
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))


def permutation_image(w: BraidWord) -> Permutation:
    """Project to S_n via H_i -> (i i+1), composing left to right."""
    images = list(range(1, w.n + 1))
    for x in w.letters:
        i = abs(x)
        # composing "images then (i i+1)" relabels the values i and i+1
        images = [i + 1 if v == i else i if v == i + 1 else v for v in images]
    return Permutation(tuple(images))


def letters_of(words: Sequence[BraidWord]) -> tuple[int, ...]:
    return tuple(x for w in words for x in w.letters)
