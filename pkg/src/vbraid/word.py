"""Virtual braid words over the generators sigma_i^{+-1} and tau_i.

Strands are named by their starting slot 1..n (bottom to top).  Every letter
acts on the two slots (i, i+1).  Words are concatenated left to right in
time, so ``permutation(w1 + w2) == permutation(w2) @ permutation(w1)``.

Text form: single-space separated tokens ``s3`` (sigma_3), ``s3'``
(sigma_3 inverse), ``t2`` (tau_2); the empty string is the identity.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyIndex, IndexOutOfRange, StrandCountMismatch, UnknownToken

SIGMA = "s"
TAU = "t"

_TOKEN = re.compile(r"^([st])(\d*)('?)$")


@dataclass(frozen=True, order=True)
class Letter:
    kind: str  # SIGMA or TAU
    index: int
    exp: int = 1

    def __post_init__(self):
        if self.kind not in (SIGMA, TAU):
            raise UnknownToken(f"unknown generator kind {self.kind!r}")
        if self.exp not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {self.exp}")
        if self.kind == TAU and self.exp != 1:
            # tau_i is an involution
            object.__setattr__(self, "exp", 1)

    @property
    def is_sigma(self) -> bool:
        return self.kind == SIGMA

    def inverse(self) -> Letter:
        if self.kind == TAU:
            return self
        return Letter(SIGMA, self.index, -self.exp)

    def to_text(self) -> str:
        return f"{self.kind}{self.index}{'' if self.exp == 1 else chr(39)}"

    def __str__(self):
        return self.to_text()


def sigma(i: int, exp: int = 1) -> Letter:
    return Letter(SIGMA, i, exp)


def tau(i: int) -> Letter:
    return Letter(TAU, i)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..n: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __matmul__(self, other: Permutation) -> Permutation:
        """Composition ``self o other`` (apply ``other`` first)."""
        if other.n != self.n:
            raise StrandCountMismatch(f"{self.n} != {other.n}")
        return Permutation(tuple(self(other(k)) for k in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, image in enumerate(self.images, start=1):
            inv[image - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(image == k for k, image in enumerate(self.images, start=1))

    def to_text(self) -> str:
        return ",".join(map(str, self.images))


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 1:
            raise ValueError("strand count must be at least 1")
        for letter in self.letters:
            if not 1 <= letter.index <= self.n - 1:
                raise IndexOutOfRange(
                    f"generator index {letter.index} out of range for n={self.n}"
                )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __str__(self):
        return to_text(self)

    @property
    def sigma_count(self) -> int:
        return sum(1 for letter in self.letters if letter.is_sigma)

    def is_classical(self) -> bool:
        return all(letter.is_sigma for letter in self.letters)


def identity_word(n: int) -> BraidWord:
    return BraidWord(n, ())


def parse_word(text: str, n: int) -> BraidWord:
    if n < 1:
        raise ValueError("strand count must be at least 1")
    letters = []
    for token in text.split():
        m = _TOKEN.match(token)
        if m is None:
            raise UnknownToken(f"unknown token {token!r}")
        kind, digits, prime = m.groups()
        if not digits:
            raise EmptyIndex(f"token {token!r} has no generator index")
        index = int(digits)
        if not 1 <= index <= n - 1:
            raise IndexOutOfRange(f"index {index} in {token!r} outside 1..{n - 1}")
        letters.append(Letter(kind, index, -1 if prime and kind == SIGMA else 1))
    return BraidWord(n, tuple(letters))


def to_text(w: BraidWord) -> str:
    return " ".join(letter.to_text() for letter in w.letters)


def word_to_json(w: BraidWord) -> dict:
    return {
        "n": w.n,
        "letters": [
            {"kind": letter.kind, "index": letter.index, "exp": letter.exp}
            for letter in w.letters
        ],
    }


def word_from_json(data: dict | str) -> BraidWord:
    if isinstance(data, str):
        data = json.loads(data)
    letters = []
    for item in data["letters"]:
        kind = item["kind"]
        if kind not in (SIGMA, TAU):
            raise UnknownToken(f"unknown generator kind {kind!r}")
        letters.append(Letter(kind, int(item["index"]), int(item.get("exp", 1))))
    return BraidWord(int(data["n"]), tuple(letters))


def concat(w1: BraidWord, w2: BraidWord) -> BraidWord:
    if w1.n != w2.n:
        raise StrandCountMismatch(f"cannot concatenate words on {w1.n} and {w2.n} strands")
    return BraidWord(w1.n, w1.letters + w2.letters)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(letter.inverse() for letter in reversed(w.letters)))


def slots_after(n: int, letters: Iterable[Letter], start: Sequence[int] | None = None) -> list[int]:
    """Strand occupying each slot after reading ``letters`` (0-based list)."""
    slots = list(start) if start is not None else list(range(1, n + 1))
    for letter in letters:
        i = letter.index
        slots[i - 1], slots[i] = slots[i], slots[i - 1]
    return slots


def permutation(w: BraidWord) -> Permutation:
    """Start-to-end permutation: strand k ends in slot ``permutation(w)(k)``."""
    slots = slots_after(w.n, w.letters)
    images = [0] * w.n
    for slot, strand in enumerate(slots, start=1):
        images[strand - 1] = slot
    return Permutation(tuple(images))
