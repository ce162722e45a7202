"""Thickened-surface realization of a virtual braid and its genus.

The graph is C0 (a cycle through a_1..a_n), C1 (a cycle through b_1..b_n),
one degree-4 vertex per regular crossing, and strand segments between them.
Virtual crossings add nothing: the two bands pass each other.  Rotations
are counter-clockwise in the plane picture with time running left to right
and slots numbered bottom to top:

* a_k: (strand, arc up to a_{k+1}, arc down to a_{k-1})
* b_k: (strand, arc down, arc up)
* crossing: (in-lower, out-lower, out-upper, in-upper)

Faces are orbits of ``h -> rotation_next(pair(h))``.  The two faces running
along the strand-free side of C0 and C1 are the distinguished boundary
components; every other face is capped by a disc.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AmbiguousDistinguished, MalformedRotation, ParseError
from .word import BraidWord

C0 = "c0"
C1 = "c1"
CROSSING = "x"
STRAND = "strand"


@dataclass
class RibbonGraph:
    rotations: list[tuple[int, ...]] = field(default_factory=list)
    labels: list[str] = field(default_factory=list)
    edges: list[tuple[int, int, str]] = field(default_factory=list)
    # half-edges whose rotation-successor opens the strand-free corner of C0 / C1
    c0_corner: int | None = None
    c1_corner: int | None = None

    _next: dict[int, int] = field(default_factory=dict, repr=False)
    _pair: dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def euler(self) -> int:
        return self.vertex_count - self.edge_count

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def add_vertex(self, label: str, rotation) -> int:
        self.rotations.append(tuple(rotation))
        self.labels.append(label)
        self._next.clear()
        return len(self.rotations) - 1

    def add_edge(self, h1: int, h2: int, kind: str) -> None:
        self.edges.append((h1, h2, kind))
        self._pair.clear()

    def check(self) -> None:
        seen: dict[int, int] = {}
        for v, rot in enumerate(self.rotations):
            for h in rot:
                if h in seen:
                    raise MalformedRotation(f"half-edge {h} appears at vertices {seen[h]} and {v}")
                seen[h] = v
        paired: set[int] = set()
        for h1, h2, _ in self.edges:
            for h in (h1, h2):
                if h not in seen:
                    raise MalformedRotation(f"edge uses half-edge {h} missing from all rotations")
                if h in paired:
                    raise MalformedRotation(f"half-edge {h} is paired twice")
                paired.add(h)
            if h1 == h2:
                raise MalformedRotation(f"half-edge {h1} paired with itself")
        unpaired = set(seen) - paired
        if unpaired:
            raise MalformedRotation(f"half-edges {sorted(unpaired)} belong to no edge")

    def rotation_next(self, h: int) -> int:
        if not self._next:
            for rot in self.rotations:
                for pos, x in enumerate(rot):
                    self._next[x] = rot[(pos + 1) % len(rot)]
        return self._next[h]

    def pair(self, h: int) -> int:
        if not self._pair:
            for h1, h2, _ in self.edges:
                self._pair[h1] = h2
                self._pair[h2] = h1
        return self._pair[h]

    def face_step(self, h: int) -> int:
        return self.rotation_next(self.pair(h))

    def half_edges(self) -> list[int]:
        return sorted(h for rot in self.rotations for h in rot)

    # -- export ------------------------------------------------------------

    def to_text(self) -> str:
        lines = []
        for v, (label, rot) in enumerate(zip(self.labels, self.rotations)):
            lines.append(" ".join(["v", str(v), label, *map(str, rot)]))
        for h1, h2, kind in self.edges:
            lines.append(f"e {h1} {h2} {kind}")
        if self.c0_corner is not None:
            lines.append(f"d {self.c0_corner} {self.c1_corner}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> RibbonGraph:
        rg = cls()
        for lineno, line in enumerate(text.splitlines(), start=1):
            parts = line.split()
            if not parts:
                continue
            try:
                if parts[0] == "v":
                    if int(parts[1]) != rg.vertex_count:
                        raise ParseError(f"line {lineno}: vertices must be numbered in order")
                    rg.add_vertex(parts[2], [int(x) for x in parts[3:]])
                elif parts[0] == "e":
                    rg.add_edge(int(parts[1]), int(parts[2]), parts[3])
                elif parts[0] == "d":
                    rg.c0_corner, rg.c1_corner = int(parts[1]), int(parts[2])
                else:
                    raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
            except (IndexError, ValueError) as exc:
                raise ParseError(f"line {lineno}: {line!r}") from exc
        return rg


@dataclass(frozen=True)
class SurfaceSummary:
    V: int
    E: int
    boundary_count: int
    distinguished: tuple[int, int]
    genus: int

    @property
    def euler(self) -> int:
        return self.V - self.E

    @property
    def capped(self) -> int:
        return self.boundary_count - 2


def build_ribbon_graph(w: BraidWord) -> RibbonGraph:
    n = w.n
    rg = RibbonGraph()
    counter = iter(range(10**9))

    def fresh(k: int) -> list[int]:
        return [next(counter) for _ in range(k)]

    a_half = []  # (strand, up, down) per a_k
    for k in range(1, n + 1):
        hs = fresh(3)
        a_half.append(hs)
        rg.add_vertex(f"a{k}", hs)
    for k in range(n):
        rg.add_edge(a_half[k][1], a_half[(k + 1) % n][2], C0)
    rg.c0_corner = a_half[0][1]

    dangling = [hs[0] for hs in a_half]  # open strand half-edge per slot
    crossings = 0
    for letter in w.letters:
        i = letter.index - 1
        if letter.is_sigma:
            crossings += 1
            in_lower, out_lower, out_upper, in_upper = fresh(4)
            rg.add_vertex(f"x{crossings}", (in_lower, out_lower, out_upper, in_upper))
            rg.add_edge(dangling[i], in_lower, STRAND)
            rg.add_edge(dangling[i + 1], in_upper, STRAND)
            dangling[i], dangling[i + 1] = out_lower, out_upper
        else:
            dangling[i], dangling[i + 1] = dangling[i + 1], dangling[i]

    b_half = []  # (strand, down, up) per b_k
    for k in range(1, n + 1):
        hs = fresh(3)
        b_half.append(hs)
        rg.add_vertex(f"b{k}", hs)
    for k in range(n):
        rg.add_edge(b_half[k][2], b_half[(k + 1) % n][1], C1)
    rg.c1_corner = b_half[0][1]
    for k in range(n):
        rg.add_edge(dangling[k], b_half[k][0], STRAND)
    return rg


def boundary_components(rg: RibbonGraph) -> list[tuple[int, ...]]:
    """Face cycles ordered by least half-edge; isolated vertices give ``()``."""
    rg.check()
    seen: set[int] = set()
    cycles = []
    for h in rg.half_edges():
        if h in seen:
            continue
        cycle = []
        x = h
        while x not in seen:
            seen.add(x)
            cycle.append(x)
            x = rg.face_step(x)
        if x != h:
            raise MalformedRotation(f"face tracing from {h} did not close")
        cycles.append(tuple(cycle))
    cycles.extend(() for rot in rg.rotations if not rot)
    return cycles


def identify_distinguished(rg: RibbonGraph, cycles: list[tuple[int, ...]] | None = None) -> tuple[int, int]:
    """Indices into ``boundary_components(rg)`` of the C0 and C1 sides."""
    if rg.c0_corner is None or rg.c1_corner is None:
        raise AmbiguousDistinguished("graph carries no C0/C1 corner marks")
    if cycles is None:
        cycles = boundary_components(rg)
    where = {h: idx for idx, cyc in enumerate(cycles) for h in cyc}
    d0 = where[rg.rotation_next(rg.c0_corner)]
    d1 = where[rg.rotation_next(rg.c1_corner)]
    if d0 == d1:
        raise AmbiguousDistinguished(f"C0 and C1 share boundary component {d0}")
    return d0, d1


def surface_summary(rg: RibbonGraph) -> SurfaceSummary:
    cycles = boundary_components(rg)
    distinguished = identify_distinguished(rg, cycles)
    capped = len(cycles) - 2
    twice_genus = -(rg.euler + capped)
    if twice_genus < 0 or twice_genus % 2:
        raise MalformedRotation(f"Euler bookkeeping gives 2g = {twice_genus}")
    return SurfaceSummary(rg.vertex_count, rg.edge_count, len(cycles), distinguished, twice_genus // 2)


def canonical_genus(w: BraidWord) -> int:
    return surface_summary(build_ribbon_graph(w)).genus


def diagram_genus(g) -> int:
    """Canonical genus of the virtual braid whose Gauss diagram is ``g``."""
    from .realize import realize

    return canonical_genus(realize(g))
