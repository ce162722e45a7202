"""Build a virtual braid word whose Gauss diagram is a given diagram."""

from __future__ import annotations

from typing import Sequence

from .gauss import BraidGaussDiagram
from .word import BraidWord, Letter, Permutation, sigma, tau


def tau_word_between(current: Sequence[int], target: Sequence[int]) -> list[Letter]:
    """Bubble-sort ``current`` (strand per slot) into ``target`` using taus."""
    n = len(current)
    rank = {strand: slot for slot, strand in enumerate(target)}
    slots = list(current)
    letters = []
    for end in range(n - 1, 0, -1):
        for i in range(end):
            if rank[slots[i]] > rank[slots[i + 1]]:
                slots[i], slots[i + 1] = slots[i + 1], slots[i]
                letters.append(tau(i + 1))
    return letters


def tau_word_for(p: Permutation) -> BraidWord:
    """A tau-only word whose start-to-end permutation is ``p``."""
    inv = p.inverse()
    target = [inv(slot) for slot in range(1, p.n + 1)]
    return BraidWord(p.n, tuple(tau_word_between(range(1, p.n + 1), target)))


def realize(g: BraidGaussDiagram) -> BraidWord:
    """A word ``w`` with ``word_to_gauss(w) == g`` (same linearization).

    For each arrow the strand that must end up in the upper slot of the
    crossing is slid next to its partner with taus, then one sigma is read.
    """
    n = g.n
    slots = list(range(1, n + 1))
    where = {strand: slot for slot, strand in enumerate(slots)}
    letters: list[Letter] = []

    def swap(i: int) -> None:
        # i is the 0-based lower slot
        a, b = slots[i], slots[i + 1]
        slots[i], slots[i + 1] = b, a
        where[a], where[b] = i + 1, i

    for arrow in g.arrows:
        if arrow.sign == 1:
            lower, upper = arrow.source, arrow.target
        else:
            lower, upper = arrow.target, arrow.source
        p, q = where[lower], where[upper]
        if p < q:
            for i in range(q - 1, p, -1):
                letters.append(tau(i + 1))
                swap(i)
        else:
            for i in range(q, p):
                letters.append(tau(i + 1))
                swap(i)
        i = where[lower]
        letters.append(sigma(i + 1, arrow.sign))
        swap(i)

    inv = g.perm.inverse()
    target = [inv(slot) for slot in range(1, n + 1)]
    letters.extend(tau_word_between(slots, target))
    return BraidWord(n, tuple(letters))
