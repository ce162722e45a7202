"""Braid-Gauss diagrams and their reparametrization normal form.

A diagram is ``n`` intervals (one per strand, named by starting slot), a
linearized sequence of signed arrows over -> under, and the end permutation.
Two linearizations describe the same diagram when they differ by swapping
adjacent arrows on disjoint strands, i.e. they are the same element of a
trace monoid whose dependence relation is "shares a strand".  The canonical
form is the lexicographically least linearization under the arrow key
``(source, target, sign)`` with ``+`` before ``-``.

Crossing convention: in sigma_i the strand in slot i passes over the strand
in slot i+1; in sigma_i^{-1} the strand in slot i+1 passes over.
"""

from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError, StrandCountMismatch
from .word import BraidWord, Permutation, permutation

_ARROW = re.compile(r"\((\d+)>(\d+):([+-])\)")
_TEXT = re.compile(r"^n=(\d+); perm=([\d,]*); arrows=(.*)$")


@dataclass(frozen=True)
class Arrow:
    source: int  # over-passing strand
    target: int  # under-passing strand
    sign: int

    def __post_init__(self):
        if self.source == self.target:
            raise ValueError("an arrow must connect two different intervals")
        if self.sign not in (1, -1):
            raise ValueError("arrow sign must be +1 or -1")

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.source, self.target, 0 if self.sign == 1 else 1)

    @property
    def strands(self) -> tuple[int, int]:
        return (self.source, self.target)

    def shares_strand(self, other: Arrow) -> bool:
        return bool({self.source, self.target} & {other.source, other.target})

    def relabel(self, p: Permutation) -> Arrow:
        return Arrow(p(self.source), p(self.target), self.sign)

    def flipped(self) -> Arrow:
        return Arrow(self.source, self.target, -self.sign)

    def to_text(self) -> str:
        return f"({self.source}>{self.target}:{'+' if self.sign == 1 else '-'})"


@dataclass(frozen=True)
class BraidGaussDiagram:
    n: int
    arrows: tuple[Arrow, ...]
    perm: Permutation

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if self.perm.n != self.n:
            raise StrandCountMismatch(f"permutation on {self.perm.n} points for n={self.n}")
        for a in self.arrows:
            if not (1 <= a.source <= self.n and 1 <= a.target <= self.n):
                raise ValueError(f"arrow {a.to_text()} leaves strands 1..{self.n}")

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        return to_text(self)

    def key(self) -> tuple:
        """Hashable identity used for deduplication and ordering."""
        return (self.n, self.perm.images, tuple(a.key for a in self.arrows))

    def is_pure(self) -> bool:
        return self.perm.is_identity()

    def writhe(self) -> int:
        return sum(a.sign for a in self.arrows)


def identity_diagram(n: int) -> BraidGaussDiagram:
    return BraidGaussDiagram(n, (), Permutation.identity(n))


def word_to_gauss(w: BraidWord) -> BraidGaussDiagram:
    slots = list(range(1, w.n + 1))
    arrows = []
    for letter in w.letters:
        i = letter.index
        lower, upper = slots[i - 1], slots[i]
        if letter.is_sigma:
            if letter.exp == 1:
                arrows.append(Arrow(lower, upper, 1))
            else:
                arrows.append(Arrow(upper, lower, -1))
        slots[i - 1], slots[i] = upper, lower
    return BraidGaussDiagram(w.n, tuple(arrows), permutation(w))


def canonical_order(arrows: Sequence[Arrow]) -> list[int]:
    """Indices of ``arrows`` in lexicographically least linearization order.

    An arrow is available once it heads the remaining queue of both its
    strands; available arrows are pairwise independent, so their keys are
    distinct and the greedy choice is unique.
    """
    queues: dict[int, list[int]] = {}
    for idx, a in enumerate(arrows):
        for s in a.strands:
            queues.setdefault(s, []).append(idx)
    heads = {s: 0 for s in queues}

    def available(idx: int) -> bool:
        return all(queues[s][heads[s]] == idx for s in arrows[idx].strands)

    heap = [(arrows[idx].key, idx) for idx in range(len(arrows)) if available(idx)]
    heapq.heapify(heap)
    order = []
    while heap:
        _, idx = heapq.heappop(heap)
        order.append(idx)
        for s in arrows[idx].strands:
            heads[s] += 1
            if heads[s] < len(queues[s]):
                nxt = queues[s][heads[s]]
                if available(nxt):
                    heapq.heappush(heap, (arrows[nxt].key, nxt))
    return order


def canonical_form(g: BraidGaussDiagram) -> BraidGaussDiagram:
    order = canonical_order(g.arrows)
    return BraidGaussDiagram(g.n, tuple(g.arrows[i] for i in order), g.perm)


def is_canonical(g: BraidGaussDiagram) -> bool:
    return canonical_order(g.arrows) == list(range(len(g.arrows)))


def compose(g1: BraidGaussDiagram, g2: BraidGaussDiagram) -> BraidGaussDiagram:
    """Diagram of ``g1`` followed by ``g2``."""
    if g1.n != g2.n:
        raise StrandCountMismatch(f"cannot compose diagrams on {g1.n} and {g2.n} strands")
    back = g1.perm.inverse()
    arrows = g1.arrows + tuple(a.relabel(back) for a in g2.arrows)
    return BraidGaussDiagram(g1.n, arrows, g2.perm @ g1.perm)


def inverse(g: BraidGaussDiagram) -> BraidGaussDiagram:
    arrows = tuple(a.relabel(g.perm).flipped() for a in reversed(g.arrows))
    return BraidGaussDiagram(g.n, arrows, g.perm.inverse())


def vm_equivalent(w1: BraidWord, w2: BraidWord) -> bool:
    """Exact virtual (virtual + mixed moves) equivalence of two words."""
    if w1.n != w2.n:
        raise StrandCountMismatch(f"words on {w1.n} and {w2.n} strands")
    return canonical_form(word_to_gauss(w1)) == canonical_form(word_to_gauss(w2))


# -- serialization ---------------------------------------------------------


def to_text(g: BraidGaussDiagram) -> str:
    arrows = "".join(a.to_text() for a in g.arrows)
    return f"n={g.n}; perm={g.perm.to_text()}; arrows={arrows}"


def parse_gauss(text: str) -> BraidGaussDiagram:
    m = _TEXT.match(text.strip())
    if m is None:
        raise ParseError(f"malformed Gauss text: {text!r}")
    n = int(m.group(1))
    perm = Permutation(tuple(int(x) for x in m.group(2).split(",") if x))
    body = m.group(3).strip()
    arrows = []
    pos = 0
    for am in _ARROW.finditer(body):
        if am.start() != pos:
            raise ParseError(f"unexpected text in arrow list: {body[pos:am.start()]!r}")
        arrows.append(Arrow(int(am.group(1)), int(am.group(2)), 1 if am.group(3) == "+" else -1))
        pos = am.end()
    if pos != len(body):
        raise ParseError(f"unexpected text in arrow list: {body[pos:]!r}")
    return BraidGaussDiagram(n, tuple(arrows), perm)


def gauss_to_json(g: BraidGaussDiagram) -> dict:
    return {
        "n": g.n,
        "perm": list(g.perm.images),
        "arrows": [{"from": a.source, "to": a.target, "sign": a.sign} for a in g.arrows],
    }


def gauss_from_json(data: dict | str) -> BraidGaussDiagram:
    if isinstance(data, str):
        data = json.loads(data)
    arrows = tuple(Arrow(int(a["from"]), int(a["to"]), int(a["sign"])) for a in data["arrows"])
    return BraidGaussDiagram(int(data["n"]), arrows, Permutation(tuple(data["perm"])))


def load_gauss(text: str) -> BraidGaussDiagram:
    """Accept either the text format or its JSON mirror."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return gauss_from_json(stripped)
    return parse_gauss(stripped)
