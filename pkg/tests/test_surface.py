import itertools

import pytest
from hypothesis import given

from vbraid.errors import AmbiguousDistinguished, MalformedRotation
from vbraid.gauss import canonical_form
from vbraid.sampling import vm_mutate
from vbraid.surface import (
    RibbonGraph,
    boundary_components,
    build_ribbon_graph,
    canonical_genus,
    diagram_genus,
    identify_distinguished,
    surface_summary,
)
from vbraid.word import BraidWord, Letter, parse_word

from conftest import diagrams, words


def W(text, n):
    return parse_word(text, n)


def test_identity_one_strand_counts():
    s = surface_summary(build_ribbon_graph(BraidWord(1, ())))
    assert (s.V, s.E, s.boundary_count, s.genus) == (2, 3, 3, 0)
    d0, d1 = s.distinguished
    assert d0 != d1


def test_sigma_counts():
    rg = build_ribbon_graph(W("s1", 2))
    degrees = sorted(rg.degree(v) for v in range(rg.vertex_count))
    assert degrees == [3, 3, 3, 3, 4]
    s = surface_summary(rg)
    assert s.genus == 0
    cycles = boundary_components(rg)
    labels = {h: rg.labels[v] for v, rot in enumerate(rg.rotations) for h in rot}
    for idx in s.distinguished:
        touched = {labels[h][0] for h in cycles[idx]}
        assert len(touched & {"a", "b"}) == 1


def test_disc_and_annulus():
    disc = RibbonGraph()
    disc.add_vertex("p", [])
    assert boundary_components(disc) == [()]
    ring = RibbonGraph()
    ring.add_vertex("p", [0, 1])
    ring.add_edge(0, 1, "loop")
    assert len(boundary_components(ring)) == 2


def test_malformed_rotations():
    rg = RibbonGraph()
    rg.add_vertex("p", [0, 1])
    rg.add_vertex("q", [1])
    rg.add_edge(0, 1, "e")
    with pytest.raises(MalformedRotation):
        boundary_components(rg)
    rg = RibbonGraph()
    rg.add_vertex("p", [0, 1, 2])
    rg.add_edge(0, 1, "e")
    with pytest.raises(MalformedRotation):
        boundary_components(rg)


def test_missing_marks():
    rg = RibbonGraph()
    rg.add_vertex("p", [])
    with pytest.raises(AmbiguousDistinguished):
        identify_distinguished(rg)


def hand_traced_genus():
    """Rotation system for t1 s1 t1 s1 on two strands, written out by hand."""
    rot = {
        "a1": ["a1s", "a1u", "a1d"],
        "a2": ["a2s", "a2u", "a2d"],
        # crossing: in-lower, out-lower, out-upper, in-upper
        "x1": ["x1il", "x1ol", "x1ou", "x1iu"],
        "x2": ["x2il", "x2ol", "x2ou", "x2iu"],
        "b1": ["b1s", "b1d", "b1u"],
        "b2": ["b2s", "b2d", "b2u"],
    }
    edges = [
        ("a1u", "a2d"), ("a2u", "a1d"),  # C0
        ("b1u", "b2d"), ("b2u", "b1d"),  # C1
        ("a2s", "x1il"), ("a1s", "x1iu"),  # after t1 the strands have swapped
        ("x1ou", "x2il"), ("x1ol", "x2iu"),  # second t1 swaps again
        ("x2ol", "b1s"), ("x2ou", "b2s"),
    ]
    nxt = {r[k]: r[(k + 1) % len(r)] for r in rot.values() for k in range(len(r))}
    mate = {}
    for x, y in edges:
        mate[x], mate[y] = y, x
    seen, faces = set(), 0
    for h in nxt:
        if h in seen:
            continue
        faces += 1
        while h not in seen:
            seen.add(h)
            h = nxt[mate[h]]
    V, E = len(rot), len(edges)
    return V, E, faces, -(V - E + faces - 2) // 2


def test_genus_examples():
    assert canonical_genus(W("s1 t1", 2)) == 0
    V, E, faces, genus = hand_traced_genus()
    assert (V, E, faces, genus) == (6, 10, 6, 0)
    s = surface_summary(build_ribbon_graph(W("t1 s1 t1 s1", 2)))
    assert (s.V, s.E, s.boundary_count, s.genus) == (V, E, faces, genus)
    assert canonical_genus(W("t2 s1 s1' t2", 3)) == 1


def test_classical_exhaustive():
    for n in (2, 3):
        gens = [Letter("s", i, e) for i in range(1, n) for e in (1, -1)]
        for length in range(7):
            for letters in itertools.product(gens, repeat=length):
                assert canonical_genus(BraidWord(n, letters)) == 0


@given(words(max_len=25))
def test_genus_is_consistent(w):
    s = surface_summary(build_ribbon_graph(w))
    assert s.boundary_count >= 2
    assert s.genus >= 0
    assert -(s.euler + s.capped) == 2 * s.genus
    assert len(set(s.distinguished)) == 2


@given(words(max_n=5, max_len=25))
def test_genus_vm_invariant(w):
    import random

    g = canonical_genus(w)
    for v in vm_mutate(random.Random(len(w.letters)), w, 15):
        assert canonical_genus(v) == g


@given(diagrams(max_arrows=8))
def test_diagram_genus_matches_word(g):
    assert diagram_genus(g) == diagram_genus(canonical_form(g))


@given(words(max_len=15))
def test_export_round_trip(w):
    rg = build_ribbon_graph(w)
    text = rg.to_text()
    again = RibbonGraph.from_text(text)
    assert again.to_text() == text
    assert surface_summary(again) == surface_summary(rg)


def test_export_format():
    text = build_ribbon_graph(BraidWord(1, ())).to_text()
    assert text == "v 0 a1 0 1 2\nv 1 b1 3 4 5\ne 1 2 c0\ne 5 4 c1\ne 0 3 strand\nd 1 4\n"
