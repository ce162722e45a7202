"""Bounded searches over the Omega-move graph of canonical Gauss diagrams."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .errors import StrandCountMismatch
from .gauss import BraidGaussDiagram, canonical_form, to_text, word_to_gauss
from .moves import MoveTrace, OmegaMoveSite, enumerate_sites, pair_writhes, sign_sum, step
from .surface import canonical_genus, diagram_genus
from .word import BraidWord
from .realize import realize

EQUIVALENT = "equivalent"
INEQUIVALENT = "inequivalent"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 2000
    insert_slack: int = 2
    time_limit_ms: int | None = None

    @classmethod
    def from_env(cls, default: Budget | None = None) -> Budget:
        """Read ``VBRAID_BUDGET``: either ``N`` or ``max_nodes=N,insert_slack=S,...``."""
        base = default or cls()
        raw = os.environ.get("VBRAID_BUDGET", "").strip()
        if not raw:
            return base
        if raw.isdigit():
            return cls(int(raw), base.insert_slack, base.time_limit_ms)
        values = {"max_nodes": base.max_nodes, "insert_slack": base.insert_slack,
                  "time_limit_ms": base.time_limit_ms}
        for item in raw.split(","):
            name, _, value = item.partition("=")
            name = name.strip()
            if name not in values:
                raise ValueError(f"unknown budget field {name!r} in VBRAID_BUDGET")
            values[name] = int(value)
        return cls(**values)


@dataclass
class Verdict:
    status: str
    trace: MoveTrace | None = None
    certificate: dict | None = None
    nodes: int = 0

    @property
    def exit_code(self) -> int:
        return {EQUIVALENT: 0, INEQUIVALENT: 1, UNKNOWN: 2}[self.status]

    def to_json(self) -> dict:
        out: dict = {"verdict": self.status, "nodes": self.nodes}
        if self.trace is not None:
            out["trace"] = self.trace.to_json()
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def invariant_certificate(g1: BraidGaussDiagram, g2: BraidGaussDiagram) -> dict | None:
    """First Omega-invariant on which the diagrams differ, if any."""
    if g1.perm != g2.perm:
        return {"invariant": "perm", "left": list(g1.perm.images), "right": list(g2.perm.images)}
    if sign_sum(g1) != sign_sum(g2):
        return {"invariant": "writhe", "left": sign_sum(g1), "right": sign_sum(g2)}
    if g1.is_pure():
        p1, p2 = pair_writhes(g1, ordered=False), pair_writhes(g2, ordered=False)
        if p1 != p2:
            fmt = lambda d: {f"{i},{j}": v for (i, j), v in d.items()}
            return {"invariant": "pair_writhe", "left": fmt(p1), "right": fmt(p2)}
    return None


def _order(g: BraidGaussDiagram) -> tuple[int, str]:
    return (len(g.arrows), to_text(g))


def r_equivalent_diagrams(
    g1: BraidGaussDiagram, g2: BraidGaussDiagram, budget: Budget | None = None
) -> Verdict:
    """Bidirectional breadth-first search between two diagrams.

    Layers are expanded in ``(arrow count, text)`` order, so verdicts and
    traces are deterministic for a fixed budget.
    """
    budget = budget or Budget()
    if g1.n != g2.n:
        raise StrandCountMismatch(f"diagrams on {g1.n} and {g2.n} strands")
    start, goal = canonical_form(g1), canonical_form(g2)
    cert = invariant_certificate(start, goal)
    if cert is not None:
        return Verdict(INEQUIVALENT, certificate=cert)
    if start == goal:
        return Verdict(EQUIVALENT, trace=MoveTrace(start, []))

    cap = max(len(start), len(goal)) + budget.insert_slack
    deadline = None if budget.time_limit_ms is None else time.monotonic() + budget.time_limit_ms / 1000
    # forward: key -> (parent key, site taking parent to key)
    # backward: key -> (child key, site taking key to child)
    fwd: dict = {start.key(): None}
    bwd: dict = {goal.key(): None}
    frontiers = {True: [start], False: [goal]}
    nodes = 0

    def forward_path(key) -> list[OmegaMoveSite]:
        sites = []
        while fwd[key] is not None:
            key, site = fwd[key][0], fwd[key][1]
            sites.append(site)
        return sites[::-1]

    def backward_path(key) -> list[OmegaMoveSite]:
        sites = []
        while bwd[key] is not None:
            key, site = bwd[key][0], bwd[key][1]
            sites.append(site)
        return sites

    while frontiers[True] and frontiers[False]:
        forward = len(frontiers[True]) <= len(frontiers[False])
        layer = sorted(frontiers[forward], key=_order)
        nxt_layer = []
        for state in layer:
            if nodes >= budget.max_nodes or (deadline and time.monotonic() > deadline):
                return Verdict(UNKNOWN, nodes=nodes)
            nodes += 1
            skey = state.key()
            for site in enumerate_sites(state, cap):
                nxt, undo = step(state, site)
                nkey = nxt.key()
                if forward:
                    if nkey in fwd:
                        continue
                    fwd[nkey] = (skey, site)
                    if nkey in bwd:
                        sites = forward_path(nkey) + backward_path(nkey)
                        return Verdict(EQUIVALENT, trace=MoveTrace(start, sites), nodes=nodes)
                else:
                    if nkey in bwd:
                        continue
                    bwd[nkey] = (skey, undo)
                    if nkey in fwd:
                        sites = forward_path(nkey) + backward_path(nkey)
                        return Verdict(EQUIVALENT, trace=MoveTrace(start, sites), nodes=nodes)
                nxt_layer.append(nxt)
        frontiers[forward] = nxt_layer
    return Verdict(UNKNOWN, nodes=nodes)


def r_equivalent_bounded(w1: BraidWord, w2: BraidWord, budget: Budget | None = None) -> Verdict:
    if w1.n != w2.n:
        raise StrandCountMismatch(f"words on {w1.n} and {w2.n} strands")
    return r_equivalent_diagrams(word_to_gauss(w1), word_to_gauss(w2), budget)


@dataclass
class GenusResult:
    genus: int
    witness: BraidWord
    start_genus: int
    nodes: int = 0


def min_genus_bounded(w: BraidWord, budget: Budget | None = None) -> GenusResult:
    """Least canonical genus over diagrams reachable from ``w`` within budget.

    States are visited in a fixed FIFO order, so a larger ``max_nodes``
    explores a superset and the result can only go down.
    """
    budget = budget or Budget()
    start = canonical_form(word_to_gauss(w))
    start_genus = canonical_genus(w)
    best, witness = start_genus, w
    cap = len(start) + budget.insert_slack
    deadline = None if budget.time_limit_ms is None else time.monotonic() + budget.time_limit_ms / 1000
    seen = {start.key()}
    queue = [start]
    head = 0
    nodes = 0
    while head < len(queue) and best > 0:
        if nodes >= budget.max_nodes or (deadline and time.monotonic() > deadline):
            break
        state = queue[head]
        head += 1
        nodes += 1
        if head > 1:
            genus = diagram_genus(state)
            if genus < best:
                best, witness = genus, realize(state)
        for site in enumerate_sites(state, cap):
            nxt = step(state, site)[0]
            if nxt.key() not in seen:
                seen.add(nxt.key())
                queue.append(nxt)
    return GenusResult(best, witness, start_genus, nodes)
