"""Seeded random words and diagrams for fuzzing and self-checks."""

from __future__ import annotations

import random

from .gauss import Arrow, BraidGaussDiagram
from .moves import R_RULES, VM_RULES, RewriteSite, enumerate_rewrites, random_rewrite
from .word import BraidWord, Letter, Permutation, sigma, tau


def random_letter(rng: random.Random, n: int, tau_prob: float = 0.4) -> Letter:
    i = rng.randint(1, n - 1)
    if rng.random() < tau_prob:
        return tau(i)
    return sigma(i, rng.choice((1, -1)))


def random_word(
    rng: random.Random, n: int, length: int, tau_prob: float = 0.4
) -> BraidWord:
    if n < 2:
        return BraidWord(n, ())
    return BraidWord(n, tuple(random_letter(rng, n, tau_prob) for _ in range(length)))


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def random_diagram(
    rng: random.Random, n: int, arrows: int, pure: bool = False
) -> BraidGaussDiagram:
    out = []
    for _ in range(arrows if n >= 2 else 0):
        i, j = rng.sample(range(1, n + 1), 2)
        out.append(Arrow(i, j, rng.choice((1, -1))))
    perm = Permutation.identity(n) if pure else random_permutation(rng, n)
    return BraidGaussDiagram(n, tuple(out), perm)


def vm_mutate(rng: random.Random, w: BraidWord, steps: int) -> list[BraidWord]:
    """The words visited by ``steps`` random virtual/mixed rewrites."""
    visited = []
    for _ in range(steps):
        w, _ = random_rewrite(w, rng, VM_RULES)
        visited.append(w)
    return visited


def word_with_r3_site(rng: random.Random, n: int, length: int) -> tuple[BraidWord, RewriteSite]:
    """A random word with a braid-relation site, and one such site."""
    if n < 3:
        raise ValueError("the braid relation needs three strands")
    w = random_word(rng, n, length)
    sites = [s for s in enumerate_rewrites(w, R_RULES, insertions=False) if s.rule.startswith("R3")]
    if not sites:
        i = rng.randint(1, n - 2)
        e = rng.choice((1, -1))
        block = (sigma(i, e), sigma(i + 1, e), sigma(i, e))
        if rng.random() < 0.5:
            block = (sigma(i + 1, e), sigma(i, e), sigma(i + 1, e))
        pos = rng.randint(0, len(w))
        w = BraidWord(n, w.letters[:pos] + block + w.letters[pos:])
        sites = [s for s in enumerate_rewrites(w, R_RULES, insertions=False) if s.rule.startswith("R3")]
    return w, rng.choice(sites)

