"""Omega moves on braid-Gauss diagrams and relations on braid words.

Omega sites refer to arrows by their index in the diagram's current
linearization.  An Omega2 insertion is placed by the number of arrows of
each of its two strands that precede it; this names every insertion up to
reparametrization, which a single linear slot cannot do.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InapplicableSite, PatternMismatch
from .gauss import Arrow, BraidGaussDiagram, canonical_order
from .word import SIGMA, TAU, BraidWord, Letter

OMEGA2_DELETE = "omega2_delete"
OMEGA2_INSERT = "omega2_insert"
OMEGA3 = "omega3"
FORWARD = "forward"
BACKWARD = "backward"


class DependenceOrder:
    """Transitive dependence order of a linearized arrow sequence.

    ``succ[i]`` / ``pred[i]`` are bitmasks of arrows strictly after / before
    arrow ``i`` in the partial order.
    """

    def __init__(self, arrows: Sequence[Arrow]):
        self.arrows = tuple(arrows)
        k = len(self.arrows)
        self.on_strand: dict[int, list[int]] = {}
        for idx, a in enumerate(self.arrows):
            for s in a.strands:
                self.on_strand.setdefault(s, []).append(idx)
        self.rank: dict[tuple[int, int], int] = {}
        for s, seq in self.on_strand.items():
            for r, idx in enumerate(seq):
                self.rank[(idx, s)] = r
        self.succ = [0] * k
        for idx in range(k - 1, -1, -1):
            mask = 0
            for s in self.arrows[idx].strands:
                nxt = self.next_on(idx, s)
                if nxt is not None:
                    mask |= (1 << nxt) | self.succ[nxt]
            self.succ[idx] = mask
        self.pred = [0] * k
        for idx in range(k):
            mask = 0
            for s in self.arrows[idx].strands:
                prv = self.prev_on(idx, s)
                if prv is not None:
                    mask |= (1 << prv) | self.pred[prv]
            self.pred[idx] = mask

    def next_on(self, idx: int, strand: int) -> int | None:
        seq = self.on_strand[strand]
        r = self.rank[(idx, strand)] + 1
        return seq[r] if r < len(seq) else None

    def prev_on(self, idx: int, strand: int) -> int | None:
        r = self.rank[(idx, strand)] - 1
        return self.on_strand[strand][r] if r >= 0 else None

    def strand_length(self, strand: int) -> int:
        return len(self.on_strand.get(strand, ()))

    def precedes(self, a: int, b: int) -> bool:
        return bool(self.succ[a] >> b & 1)

    def is_block(self, members: Iterable[int]) -> bool:
        """True iff ``members`` can be made consecutive in some linearization."""
        members = list(members)
        mask = 0
        for m in members:
            mask |= 1 << m
        for a in members:
            for b in members:
                if self.succ[a] & self.pred[b] & ~mask:
                    return False
        return True

    def ideal(self, seeds: Iterable[int]) -> int:
        mask = 0
        for s in seeds:
            mask |= (1 << s) | self.pred[s]
        return mask


@dataclass(frozen=True)
class OmegaMoveSite:
    kind: str
    arrows: tuple[int, ...] = ()
    direction: str | None = None
    # Omega2 insertion parameters
    source: int | None = None
    target: int | None = None
    sign: int | None = None
    offsets: tuple[int, int] | None = None

    def to_json(self) -> dict:
        if self.kind == OMEGA2_INSERT:
            args = {
                "from": self.source,
                "to": self.target,
                "sign": self.sign,
                "offsets": list(self.offsets),
            }
        elif self.kind == OMEGA3:
            args = {"arrows": list(self.arrows), "direction": self.direction}
        else:
            args = {"arrows": list(self.arrows)}
        return {"kind": self.kind, "args": args}

    @classmethod
    def from_json(cls, data: dict) -> OmegaMoveSite:
        kind, args = data["kind"], data["args"]
        if kind == OMEGA2_INSERT:
            return cls(
                kind,
                source=int(args["from"]),
                target=int(args["to"]),
                sign=int(args["sign"]),
                offsets=tuple(args["offsets"]),
            )
        if kind == OMEGA3:
            return cls(kind, tuple(args["arrows"]), direction=args["direction"])
        if kind == OMEGA2_DELETE:
            return cls(kind, tuple(args["arrows"]))
        raise ValueError(f"unknown move kind {kind!r}")


def omega2_delete(i: int, j: int) -> OmegaMoveSite:
    return OmegaMoveSite(OMEGA2_DELETE, (i, j))


def omega2_insert(source: int, target: int, sign: int, offsets: tuple[int, int]) -> OmegaMoveSite:
    return OmegaMoveSite(OMEGA2_INSERT, source=source, target=target, sign=sign, offsets=tuple(offsets))


def omega3(a: int, b: int, c: int, direction: str = FORWARD) -> OmegaMoveSite:
    return OmegaMoveSite(OMEGA3, (a, b, c), direction=direction)


# -- enumeration -----------------------------------------------------------


def enumerate_omega2_deletions(g: BraidGaussDiagram) -> list[OmegaMoveSite]:
    order = DependenceOrder(g.arrows)
    sites = []
    for a, arrow in enumerate(g.arrows):
        b = order.next_on(a, arrow.source)
        if b is None or order.next_on(a, arrow.target) != b:
            continue
        other = g.arrows[b]
        if other.strands == arrow.strands and other.sign == -arrow.sign and order.is_block((a, b)):
            sites.append(omega2_delete(a, b))
    return sites


def _omega3_pattern(arrows: Sequence[Arrow], a: int, b: int, c: int, direction: str) -> bool:
    x, y, z = arrows[a], arrows[b], arrows[c]
    if not (x.sign == y.sign == z.sign):
        return False
    if direction == FORWARD:
        # (i>j)(i>k)(j>k)
        i, j = x.source, x.target
        k = y.target
        return y.source == i and z.source == j and z.target == k and len({i, j, k}) == 3
    # (j>k)(i>k)(i>j)
    j, k = x.source, x.target
    i = y.source
    return y.target == k and z.source == i and z.target == j and len({i, j, k}) == 3


def enumerate_omega3(g: BraidGaussDiagram) -> list[OmegaMoveSite]:
    order = DependenceOrder(g.arrows)
    sites = []
    for a, arrow in enumerate(g.arrows):
        u, v = arrow.source, arrow.target
        # forward: first arrow (i>j); next on i is (i>k), next on j is (j>k)
        # backward: first arrow (j>k); next on k is (i>k), next on j is (i>j)
        for direction, (s1, s2) in ((FORWARD, (u, v)), (BACKWARD, (v, u))):
            b, c = order.next_on(a, s1), order.next_on(a, s2)
            if b is None or c is None or b == c or not order.precedes(b, c):
                continue
            if _omega3_pattern(g.arrows, a, b, c, direction) and order.is_block((a, b, c)):
                sites.append(omega3(a, b, c, direction))
    return sites


def enumerate_omega2_insertions(
    g: BraidGaussDiagram, max_arrows: int | None = None
) -> list[OmegaMoveSite]:
    """All Omega2 insertions, empty if the result would exceed ``max_arrows``."""
    if max_arrows is not None and len(g.arrows) + 2 > max_arrows:
        return []
    order = DependenceOrder(g.arrows)
    sites = []
    for i in range(1, g.n + 1):
        for j in range(1, g.n + 1):
            if i == j:
                continue
            for oi in range(order.strand_length(i) + 1):
                for oj in range(order.strand_length(j) + 1):
                    if _insertion_ideal(order, i, j, (oi, oj)) is None:
                        continue
                    for sign in (1, -1):
                        sites.append(omega2_insert(i, j, sign, (oi, oj)))
    return sites


def _insertion_ideal(order: DependenceOrder, i: int, j: int, offsets: tuple[int, int]) -> int | None:
    oi, oj = offsets
    seq_i = order.on_strand.get(i, [])
    seq_j = order.on_strand.get(j, [])
    if not (0 <= oi <= len(seq_i) and 0 <= oj <= len(seq_j)):
        return None
    ideal = order.ideal(seq_i[:oi] + seq_j[:oj])
    if oi < len(seq_i) and ideal >> seq_i[oi] & 1:
        return None
    if oj < len(seq_j) and ideal >> seq_j[oj] & 1:
        return None
    return ideal


def enumerate_sites(g: BraidGaussDiagram, max_arrows: int | None = None) -> list[OmegaMoveSite]:
    return (
        enumerate_omega2_deletions(g)
        + enumerate_omega3(g)
        + enumerate_omega2_insertions(g, max_arrows)
    )


# -- application -----------------------------------------------------------


def _check_site(g: BraidGaussDiagram, site: OmegaMoveSite) -> DependenceOrder:
    order = DependenceOrder(g.arrows)
    k = len(g.arrows)
    if site.kind in (OMEGA2_DELETE, OMEGA3):
        if any(not 0 <= idx < k for idx in site.arrows) or len(set(site.arrows)) != len(site.arrows):
            raise InapplicableSite(f"arrow references {site.arrows} out of range")
    if site.kind == OMEGA2_DELETE:
        if len(site.arrows) != 2:
            raise InapplicableSite("Omega2 deletion needs two arrows")
        a, b = site.arrows
        x, y = g.arrows[a], g.arrows[b]
        if not (a < b and x.strands == y.strands and x.sign == -y.sign and order.is_block((a, b))):
            raise InapplicableSite(f"arrows {a}, {b} are not a deletable Omega2 pair")
    elif site.kind == OMEGA3:
        if len(site.arrows) != 3 or site.direction not in (FORWARD, BACKWARD):
            raise InapplicableSite("Omega3 needs three arrows and a direction")
        a, b, c = site.arrows
        if not (
            order.precedes(a, b)
            and order.precedes(b, c)
            and _omega3_pattern(g.arrows, a, b, c, site.direction)
            and order.is_block((a, b, c))
        ):
            raise InapplicableSite(f"arrows {site.arrows} are not an Omega3 {site.direction} block")
    elif site.kind == OMEGA2_INSERT:
        i, j = site.source, site.target
        if not (
            i is not None
            and j is not None
            and 1 <= i <= g.n
            and 1 <= j <= g.n
            and i != j
            and site.sign in (1, -1)
            and site.offsets is not None
            and _insertion_ideal(order, i, j, site.offsets) is not None
        ):
            raise InapplicableSite(f"invalid Omega2 insertion {site}")
    else:
        raise InapplicableSite(f"unknown move kind {site.kind!r}")
    return order


def _apply(g: BraidGaussDiagram, site: OmegaMoveSite) -> tuple[BraidGaussDiagram, list[int]]:
    """Apply ``site``; also return the indices of the touched arrows in the result."""
    order = _check_site(g, site)
    arrows = g.arrows
    if site.kind == OMEGA2_DELETE:
        drop = set(site.arrows)
        kept = tuple(a for idx, a in enumerate(arrows) if idx not in drop)
        return BraidGaussDiagram(g.n, kept, g.perm), []

    if site.kind == OMEGA3:
        a, b, c = site.arrows
        block = {a, b, c}
        below = order.pred[a] | order.pred[b] | order.pred[c]
        before = [idx for idx in range(len(arrows)) if below >> idx & 1 and idx not in block]
        after = [idx for idx in range(len(arrows)) if not below >> idx & 1 and idx not in block]
        new = list(arrows[i] for i in before) + [arrows[c], arrows[b], arrows[a]]
        new += [arrows[i] for i in after]
        start = len(before)
        return BraidGaussDiagram(g.n, tuple(new), g.perm), [start, start + 1, start + 2]

    ideal = _insertion_ideal(order, site.source, site.target, site.offsets)
    before = [idx for idx in range(len(arrows)) if ideal >> idx & 1]
    after = [idx for idx in range(len(arrows)) if not ideal >> idx & 1]
    pair = [Arrow(site.source, site.target, site.sign), Arrow(site.source, site.target, -site.sign)]
    new = [arrows[i] for i in before] + pair + [arrows[i] for i in after]
    start = len(before)
    return BraidGaussDiagram(g.n, tuple(new), g.perm), [start, start + 1]


def apply_omega(g: BraidGaussDiagram, site: OmegaMoveSite) -> BraidGaussDiagram:
    return _apply(g, site)[0]


def step(g: BraidGaussDiagram, site: OmegaMoveSite) -> tuple[BraidGaussDiagram, OmegaMoveSite]:
    """Apply ``site`` and canonicalize; return the result and the undoing site.

    The undoing site is expressed against the canonical result.
    """
    result, touched = _apply(g, site)
    order = canonical_order(result.arrows)
    canon = BraidGaussDiagram(g.n, tuple(result.arrows[i] for i in order), g.perm)
    where = {old: new for new, old in enumerate(order)}
    if site.kind == OMEGA2_DELETE:
        a, _ = site.arrows
        arrow = g.arrows[a]
        dep = DependenceOrder(g.arrows)
        offsets = (dep.rank[(a, arrow.source)], dep.rank[(a, arrow.target)])
        undo = omega2_insert(arrow.source, arrow.target, arrow.sign, offsets)
    elif site.kind == OMEGA2_INSERT:
        undo = omega2_delete(*sorted(where[t] for t in touched))
    else:
        flip = BACKWARD if site.direction == FORWARD else FORWARD
        undo = omega3(*(where[t] for t in touched), direction=flip)
    return canon, undo


def canonical_step(g: BraidGaussDiagram, site: OmegaMoveSite) -> BraidGaussDiagram:
    return step(g, site)[0]


def sign_sum(g: BraidGaussDiagram) -> int:
    return sum(a.sign for a in g.arrows)


def pair_writhes(g: BraidGaussDiagram, ordered: bool = True) -> dict[tuple[int, int], int]:
    sums: dict[tuple[int, int], int] = {}
    for a in g.arrows:
        key = a.strands if ordered else tuple(sorted(a.strands))
        sums[key] = sums.get(key, 0) + a.sign
    return {k: v for k, v in sorted(sums.items()) if v}


@dataclass
class MoveTrace:
    """Sites applied one after another, canonicalizing after every step."""

    start: BraidGaussDiagram
    sites: list[OmegaMoveSite] = field(default_factory=list)

    def __len__(self):
        return len(self.sites)

    def replay(self) -> BraidGaussDiagram:
        from .gauss import canonical_form

        g = canonical_form(self.start)
        for site in self.sites:
            g = canonical_step(g, site)
        return g

    def to_json(self) -> list[dict]:
        return [site.to_json() for site in self.sites]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, start: BraidGaussDiagram, data: list[dict] | str) -> MoveTrace:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(start, [OmegaMoveSite.from_json(d) for d in data])


# -- word relations --------------------------------------------------------

# A pattern letter is (kind, index variable, index offset, exponent); the
# exponent is "e" (a free sign), "-e" (its negation) or 1.
PatternLetter = tuple[str, str, int, object]


@dataclass(frozen=True)
class Rule:
    name: str
    lhs: tuple[PatternLetter, ...]
    rhs: tuple[PatternLetter, ...]
    family: str  # "vm" or "R"
    far: bool = False  # requires |i - j| >= 2

    @property
    def variables(self) -> tuple[str, ...]:
        names = []
        for pat in self.lhs + self.rhs:
            if pat[1] not in names:
                names.append(pat[1])
        return tuple(names)

    @property
    def signed(self) -> bool:
        return any(pat[3] in ("e", "-e") for pat in self.lhs + self.rhs)


def _relation(name, lhs, rhs, family, far=False) -> list[Rule]:
    return [
        Rule(f"{name}", tuple(lhs), tuple(rhs), family, far),
        Rule(f"{name}~", tuple(rhs), tuple(lhs), family, far),
    ]


RULES: dict[str, Rule] = {
    r.name: r
    for r in (
        _relation("R3", [(SIGMA, "i", 0, "e"), (SIGMA, "i", 1, "e"), (SIGMA, "i", 0, "e")],
                  [(SIGMA, "i", 1, "e"), (SIGMA, "i", 0, "e"), (SIGMA, "i", 1, "e")], "R")
        + _relation("R2", [(SIGMA, "i", 0, "e"), (SIGMA, "i", 0, "-e")], [], "R")
        + _relation("SS", [(SIGMA, "i", 0, "e"), (SIGMA, "j", 0, "f")],
                    [(SIGMA, "j", 0, "f"), (SIGMA, "i", 0, "e")], "vm", far=True)
        + _relation("V3", [(TAU, "i", 0, 1), (TAU, "i", 1, 1), (TAU, "i", 0, 1)],
                    [(TAU, "i", 1, 1), (TAU, "i", 0, 1), (TAU, "i", 1, 1)], "vm")
        + _relation("TT", [(TAU, "i", 0, 1), (TAU, "j", 0, 1)],
                    [(TAU, "j", 0, 1), (TAU, "i", 0, 1)], "vm", far=True)
        + _relation("M", [(SIGMA, "i", 0, "e"), (TAU, "i", 1, 1), (TAU, "i", 0, 1)],
                    [(TAU, "i", 1, 1), (TAU, "i", 0, 1), (SIGMA, "i", 1, "e")], "vm")
        + _relation("M'", [(TAU, "i", 0, 1), (SIGMA, "i", 1, "e"), (TAU, "i", 0, 1)],
                    [(TAU, "i", 1, 1), (SIGMA, "i", 0, "e"), (TAU, "i", 1, 1)], "vm")
        + _relation("TS", [(TAU, "i", 0, 1), (SIGMA, "j", 0, "e")],
                    [(SIGMA, "j", 0, "e"), (TAU, "i", 0, 1)], "vm", far=True)
        + _relation("V2", [(TAU, "i", 0, 1), (TAU, "i", 0, 1)], [], "vm")
    )
}

VM_RULES = tuple(r for r in RULES.values() if r.family == "vm")
R_RULES = tuple(r for r in RULES.values() if r.family == "R")


def _match(rule: Rule, letters: Sequence[Letter], position: int) -> dict | None:
    if position < 0 or position + len(rule.lhs) > len(letters):
        return None
    env: dict = {}
    for pat, letter in zip(rule.lhs, letters[position:position + len(rule.lhs)]):
        kind, var, offset, exp = pat
        if letter.kind != kind:
            return None
        idx = letter.index - offset
        if env.setdefault(var, idx) != idx:
            return None
        if exp == "e":
            if env.setdefault("e", letter.exp) != letter.exp:
                return None
        elif exp == "-e":
            if env.setdefault("e", -letter.exp) != -letter.exp:
                return None
        elif exp == "f":
            if env.setdefault("f", letter.exp) != letter.exp:
                return None
    return env


def _admissible(rule: Rule, env: dict, n: int) -> bool:
    for pat in rule.lhs + rule.rhs:
        idx = env[pat[1]] + pat[2]
        if not 1 <= idx <= n - 1:
            return False
    if rule.far and abs(env["i"] - env["j"]) < 2:
        return False
    return True


def _build(rule: Rule, env: dict) -> tuple[Letter, ...]:
    out = []
    for kind, var, offset, exp in rule.rhs:
        if exp == "e":
            e = env["e"]
        elif exp == "-e":
            e = -env["e"]
        elif exp == "f":
            e = env["f"]
        else:
            e = 1
        out.append(Letter(kind, env[var] + offset, e))
    return tuple(out)


def rewrite_word(w: BraidWord, rule: Rule | str, position: int, **bindings) -> BraidWord:
    """Replace the occurrence of ``rule.lhs`` at ``position`` by ``rule.rhs``.

    Rules with an empty left-hand side (insertions) take their index and
    sign from ``bindings``, e.g. ``rewrite_word(w, "V2~", 0, i=1)``.
    """
    if isinstance(rule, str):
        rule = RULES[rule]
    if rule.lhs:
        env = _match(rule, w.letters, position)
        if env is None:
            raise PatternMismatch(f"rule {rule.name} does not match at position {position}")
    else:
        if not 0 <= position <= len(w.letters):
            raise PatternMismatch(f"insertion position {position} out of range")
        env = {"e": 1, **bindings}
        missing = [v for v in rule.variables if v not in env]
        if missing:
            raise PatternMismatch(f"rule {rule.name} needs bindings for {missing}")
    if not _admissible(rule, env, w.n):
        raise PatternMismatch(f"rule {rule.name} not admissible here: {env}")
    letters = w.letters[:position] + _build(rule, env) + w.letters[position + len(rule.lhs):]
    return BraidWord(w.n, letters)


@dataclass(frozen=True)
class RewriteSite:
    rule: str
    position: int
    bindings: tuple[tuple[str, int], ...] = ()


def enumerate_rewrites(
    w: BraidWord, rules: Iterable[Rule] = VM_RULES, insertions: bool = True
) -> Iterator[RewriteSite]:
    for rule in rules:
        if rule.lhs:
            for pos in range(len(w.letters) - len(rule.lhs) + 1):
                env = _match(rule, w.letters, pos)
                if env is not None and _admissible(rule, env, w.n):
                    yield RewriteSite(rule.name, pos)
        elif insertions:
            for pos in range(len(w.letters) + 1):
                for i in range(1, w.n):
                    for e in ((1, -1) if rule.signed else (1,)):
                        yield RewriteSite(rule.name, pos, (("i", i), ("e", e)))


def apply_rewrite(w: BraidWord, site: RewriteSite) -> BraidWord:
    return rewrite_word(w, site.rule, site.position, **dict(site.bindings))


def random_rewrite(
    w: BraidWord, rng: random.Random, rules: Iterable[Rule] = VM_RULES
) -> tuple[BraidWord, RewriteSite]:
    """One uniformly chosen applicable rewrite (deletions preferred over nothing)."""
    rules = tuple(rules)
    removing = list(enumerate_rewrites(w, rules, insertions=False))
    inserting = [r for r in rules if not r.lhs]
    # choose insertion with probability 1/4 so words do not shrink to nothing
    if inserting and w.n > 1 and (not removing or rng.random() < 0.25):
        rule = rng.choice(inserting)
        env = (("i", rng.randint(1, w.n - 1)), ("e", rng.choice((1, -1))))
        site = RewriteSite(rule.name, rng.randint(0, len(w.letters)), env)
    elif removing:
        site = rng.choice(removing)
    else:
        return w, RewriteSite("identity", 0)
    return apply_rewrite(w, site), site
