"""Words in the surface generators ``c1 .. c2g`` and their abelianization.

A letter is a pair ``(k, e)`` with ``k >= 1`` the generator index and
``e = +1`` or ``-1`` the exponent.  Homology classes are plain tuples of
ints of length ``2g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidWordError

IntVector = tuple  # tuple[int, ...] of length 2g


@dataclass(frozen=True)
class Word:
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple((int(k), int(e)) for k, e in self.letters)
        for k, e in letters:
            if k < 1:
                raise InvalidWordError(f"generator index must be positive, got c{k}")
            if e not in (1, -1):
                raise InvalidWordError(f"exponent must be +1 or -1, got {e}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> "Word":
        """Build a word from tokens such as ``"c1"`` or ``"-c3"``."""
        letters = []
        for tok in tokens:
            sign = 1
            body = tok
            if body.startswith("-"):
                sign, body = -1, body[1:]
            if not body.startswith("c") or not body[1:].isdigit():
                raise InvalidWordError(f"bad letter token {tok!r}")
            letters.append((int(body[1:]), sign))
        return cls(tuple(letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        return cls.from_tokens(text.split())

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __str__(self):
        return " ".join(("c%d" if e > 0 else "-c%d") % k for k, e in self.letters)

    def inverse(self) -> "Word":
        return Word(tuple((k, -e) for k, e in reversed(self.letters)))

    def rotate(self, n: int = 1) -> "Word":
        """Cyclic rotation moving the first ``n`` letters to the end."""
        if not self.letters:
            return self
        n %= len(self.letters)
        return Word(self.letters[n:] + self.letters[:n])

    def max_index(self) -> int:
        return max((k for k, _ in self.letters), default=0)

    def is_freely_reduced(self) -> bool:
        return all(
            not (a[0] == b[0] and a[1] == -b[1])
            for a, b in zip(self.letters, self.letters[1:])
        )

    def is_cyclically_reduced(self) -> bool:
        if not self.is_freely_reduced():
            return False
        if len(self.letters) < 2:
            return True
        (k0, e0), (k1, e1) = self.letters[-1], self.letters[0]
        return not (k0 == k1 and e0 == -e1)


def _check(w: Word, g: int) -> None:
    if g < 1:
        raise InvalidWordError(f"genus must be at least 1, got {g}")
    for k, _ in w.letters:
        if k > 2 * g:
            raise InvalidWordError(f"letter c{k} out of range c1..c{2 * g} for genus {g}")


def _count(letters: Sequence, g: int) -> IntVector:
    v = [0] * (2 * g)
    for k, e in letters:
        v[k - 1] += e
    return tuple(v)


def abelianize(w: Word, g: int) -> IntVector:
    """Exponent sum of each generator: the class of ``w`` in ``Z^(2g)``."""
    _check(w, g)
    return _count(w.letters, g)


def prefix_vector(w: Word, k: int, g: int) -> IntVector:
    """Abelianization of the first ``k`` letters of ``w``."""
    _check(w, g)
    if not 0 <= k <= len(w):
        raise IndexError(f"prefix length {k} outside 0..{len(w)}")
    return _count(w.letters[:k], g)


def suffix_vector(w: Word, l: int, g: int) -> IntVector:
    """Abelianization of letters ``l+1 .. n`` of ``w`` (empty when ``l == n``)."""
    _check(w, g)
    if not 0 <= l <= len(w):
        raise IndexError(f"suffix start {l} outside 0..{len(w)}")
    return _count(w.letters[l:], g)


def add(*vectors: IntVector) -> IntVector:
    return tuple(sum(xs) for xs in zip(*vectors))


def sub(u: IntVector, v: IntVector) -> IntVector:
    return tuple(a - b for a, b in zip(u, v))
